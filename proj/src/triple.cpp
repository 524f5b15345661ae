#include "nilorb/triple.hpp"

#include "nilorb/linalg.hpp"

namespace nilorb {

std::size_t basis_index(const Partition& p, int d, int l, int j)
{
  std::size_t offset = 0;
  for (const auto& part : p.parts()) {
    if (part.d == d) {
      if (l < 0 || l >= d || j < 1 || j > part.t) throw std::out_of_range("basis_index");
      return offset + static_cast<std::size_t>(l * part.t + j - 1);
    }
    offset += static_cast<std::size_t>(part.d * part.t);
  }
  throw std::out_of_range("basis_index: no part " + std::to_string(d));
}

std::vector<std::string> basis_labels(const Partition& p)
{
  std::vector<std::string> out;
  for (const auto& [d, t] : p.parts())
    for (int l = 0; l < d; ++l)
      for (int j = 1; j <= t; ++j)
        out.push_back("X^" + std::to_string(l) + ".v[" + std::to_string(d) + "][" +
                      std::to_string(j) + "]");
  return out;
}

Triple weight_blocks(const AlgebraSpec& a, const Partition& p)
{
  std::size_t n = static_cast<std::size_t>(p.n());
  Field f = a.scalar_field();
  Triple tr{Matrix(n, n, f), Matrix(n, n, f), Matrix(n, n, f), std::nullopt, std::nullopt,
            basis_labels(p)};
  for (const auto& [d, t] : p.parts()) {
    for (int l = 0; l < d; ++l) {
      for (int j = 1; j <= t; ++j) {
        std::size_t c = basis_index(p, d, l, j);
        tr.H.raw(c, c) = Scalar(2 * l + 1 - d);
        if (l + 1 < d) tr.X.raw(basis_index(p, d, l + 1, j), c) = Scalar(1);
        if (l > 0) tr.Y.raw(basis_index(p, d, l - 1, j), c) = Scalar(l * (d - l));
      }
    }
  }
  return tr;
}

Triple build_triple(const AlgebraSpec& a, const OrbitDatum& d)
{
  if (auto why = membership_violation(a, d)) throw NotInParametrizingSet(*why);
  if (d.is_zero_orbit())
    throw ZeroOrbitError("the zero orbit " + d.partition.to_string() + " has no sl2-triple");
  Triple tr = weight_blocks(a, d.partition);
  if (a.has_form()) {
    tr.gram = gram_matrix(a, d);
    tr.form = a.form();
  }
  return tr;
}

namespace {

Matrix split_symplectic(int t, Field f)
{
  Matrix m(t, t, f);
  for (int j = 0; j < t / 2; ++j) {
    m.raw(j, t / 2 + j) = Scalar(1);
    m.raw(t / 2 + j, j) = Scalar(-1);
  }
  return m;
}

Matrix sign_diagonal(int p, int t, Field f)
{
  Matrix m(t, t, f);
  for (int j = 0; j < t; ++j) m.raw(j, j) = Scalar(j < p ? 1 : -1);
  return m;
}

Matrix scalar_diagonal(int t, const Scalar& s, Field f)
{
  Matrix m(t, t, f);
  for (int j = 0; j < t; ++j) m.raw(j, j) = s;
  return m;
}

}  // namespace

Matrix lowest_weight_form(const AlgebraSpec& a, const OrbitDatum& datum, int d)
{
  int t = datum.partition.multiplicity(d);
  if (t == 0) throw std::out_of_range("lowest_weight_form: no part " + std::to_string(d));
  Field f = a.scalar_field();
  bool odd = d % 2 == 1;
  switch (a.family) {
    case Family::so_c: return odd ? Matrix::identity(t, f) : split_symplectic(t, f);
    case Family::so_pq: return odd ? sign_diagonal(datum.p_of(d), t, f) : split_symplectic(t, f);
    case Family::sp_c: return odd ? split_symplectic(t, f) : Matrix::identity(t, f);
    case Family::sp_pq:
      return odd ? sign_diagonal(datum.p_of(d), t, f) : scalar_diagonal(t, Scalar::j(), f);
    case Family::so_star:
      return odd ? scalar_diagonal(t, Scalar::j(), f) : sign_diagonal(datum.p_of(d), t, f);
    default: throw std::logic_error(a.name() + " carries no invariant form");
  }
}

Matrix gram_matrix(const AlgebraSpec& a, const OrbitDatum& datum)
{
  if (auto why = membership_violation(a, datum)) throw NotInParametrizingSet(*why);
  const Partition& p = datum.partition;
  std::size_t n = static_cast<std::size_t>(p.n());
  Matrix s(n, n, a.scalar_field());
  for (const auto& [d, t] : p.parts()) {
    Matrix form = lowest_weight_form(a, datum, d);
    for (int l = 0; l < d; ++l) {
      Scalar sign(l % 2 ? -1 : 1);
      for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
          s.raw(basis_index(p, d, l, i), basis_index(p, d, d - 1 - l, j)) = sign * form(i - 1, j - 1);
    }
  }
  return s;
}

Matrix form_adjoint(const Matrix& m, FormKind f)
{
  return f.sigma_conj ? conj_transpose(m) : transpose(m);
}

bool has_adapted_basis(Family f)
{
  return f == Family::so_c || f == Family::so_pq || f == Family::sp_c || f == Family::sp_pq;
}

Matrix standard_form(const AlgebraSpec& a)
{
  switch (a.family) {
    case Family::so_c: return Matrix::identity(a.n);
    case Family::so_pq:
    case Family::sp_pq: return sign_diagonal(a.p, a.n, Field::Rational);
    case Family::sp_c: return split_symplectic(2 * a.n, Field::Rational);
    default: throw std::logic_error(a.name() + " has no adapted basis");
  }
}

namespace {

// A vector of V as a sparse combination of basis vectors, scalars on the right.
using Combo = std::vector<std::pair<std::size_t, Scalar>>;

const Scalar& inv_sqrt2()
{
  static const Scalar s = Scalar::sqrt2() * Scalar(Rational(1, 2));
  return s;
}

Combo pair_combo(std::size_t a, const Scalar& ca, std::size_t b, const Scalar& cb)
{
  return {{a, ca}, {b, cb}};
}

struct AdaptedBuilder {
  const Partition& p;
  std::vector<Combo> cols;

  std::size_t at(int d, int l, int j) const { return basis_index(p, d, l, j); }

  // Odd part, real coefficients (so_pq, sp_pq): returns the w for level l, row j.
  Combo odd_real(int th, int l, int j) const
  {
    int mid = (th - 1) / 2;
    std::size_t a = at(th, l, j), b = at(th, th - 1 - l, j);
    if (l == mid) return {{a, Scalar(1)}};
    if (l < mid) return pair_combo(a, inv_sqrt2(), b, inv_sqrt2());
    return pair_combo(a, -inv_sqrt2(), b, inv_sqrt2());
  }

  // sign of <w, w> for odd_real on a row whose lowest form value is eps
  static int odd_real_sign(int th, int l, int eps)
  {
    int mid = (th - 1) / 2;
    int s = l < mid ? (l % 2 ? -1 : 1) : l == mid ? (mid % 2 ? -1 : 1) : (l % 2 ? 1 : -1);
    return eps * s;
  }

  Combo odd_so_c(int th, int l, int j) const
  {
    int mid = (th - 1) / 2;
    std::size_t a = at(th, l, j), b = at(th, th - 1 - l, j);
    Scalar unit = Scalar::i();
    if (l == mid) return {{a, mid % 2 ? unit : Scalar(1)}};
    Scalar c = inv_sqrt2() * ((l < mid) == (l % 2 == 0) ? Scalar(1) : unit);
    if (l < mid) return pair_combo(a, c, b, c);
    return pair_combo(a, -c, b, c);
  }

  Combo odd_sp_c(int th, int l, int j) const
  {
    int mid = (th - 1) / 2;
    std::size_t a = at(th, l, j), b = at(th, th - 1 - l, j);
    // 1/sqrt(-2) = -i/sqrt(2)
    Scalar c_imag = -(Scalar::i() * inv_sqrt2());
    if (l == mid) return {{a, th % 4 == 1 ? Scalar(1) : Scalar::i()}};
    if (l < mid) {
      Scalar c = l % 2 ? c_imag : inv_sqrt2();
      return pair_combo(a, c, b, c);
    }
    Scalar c = l % 2 ? inv_sqrt2() : c_imag;
    return pair_combo(a, -c, b, c);
  }

  // Even part, the 2t vectors of level l < eta/2 (so_c with i, so_pq without).
  std::vector<Combo> even_so(int eta, int l, int t, bool complex) const
  {
    int h = t / 2;
    Scalar s(l % 2 ? -1 : 1);
    Scalar c = inv_sqrt2() * (complex ? Scalar::i() : Scalar(1));
    int ll = eta - 1 - l;
    std::vector<Combo> w;
    for (int j = 1; j <= h; ++j) w.push_back(pair_combo(at(eta, l, j), inv_sqrt2(), at(eta, ll, h + j), s * inv_sqrt2()));
    for (int j = h + 1; j <= t; ++j) w.push_back(pair_combo(at(eta, l, j), inv_sqrt2(), at(eta, ll, j - h), -s * inv_sqrt2()));
    for (int j = t + 1; j <= t + h; ++j) w.push_back(pair_combo(at(eta, l, j - t), c, at(eta, ll, j - h), -s * c));
    for (int j = t + h + 1; j <= 2 * t; ++j) w.push_back(pair_combo(at(eta, l, j - t), c, at(eta, ll, j - t - h), s * c));
    return w;
  }

  Combo even_sp_pq(int eta, int l, int j) const
  {
    std::size_t a = at(eta, l, j), b = at(eta, eta - 1 - l, j);
    Scalar jr = Scalar::j() * inv_sqrt2();
    if (l < eta / 2) return pair_combo(a, inv_sqrt2(), b, jr);
    return pair_combo(a, -jr, b, inv_sqrt2());
  }

  void push(Combo c) { cols.push_back(std::move(c)); }
  void push(const std::vector<Combo>& cs, std::size_t from, std::size_t to)
  {
    for (std::size_t k = from; k < to; ++k) cols.push_back(cs[k]);
  }

  Matrix assemble(Field f) const
  {
    std::size_t n = static_cast<std::size_t>(p.n());
    if (cols.size() != n) throw std::logic_error("adapted basis has the wrong length");
    Matrix T(n, n, f);
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [row, coef] : cols[c]) T.raw(row, c) += coef;
    return T;
  }
};

}  // namespace

Matrix adapted_change_of_basis(const AlgebraSpec& a, const OrbitDatum& datum)
{
  if (!has_adapted_basis(a.family))
    throw std::logic_error(a.name() + " has no adapted basis");
  if (auto why = membership_violation(a, datum)) throw NotInParametrizingSet(*why);
  const Partition& p = datum.partition;
  AdaptedBuilder B{p, {}};
  PartitionClasses cls = classify(p);

  switch (a.family) {
    case Family::so_c: {
      for (int eta : cls.E)
        for (int l = 0; l < eta / 2; ++l) {
          auto w = B.even_so(eta, l, p.multiplicity(eta), true);
          B.push(w, 0, w.size());
        }
      for (int th : cls.O)
        for (int l = 0; l < th; ++l)
          for (int j = 1; j <= p.multiplicity(th); ++j) B.push(B.odd_so_c(th, l, j));
      return B.assemble(Field::Tower);
    }
    case Family::so_pq:
    case Family::sp_pq: {
      bool so = a.family == Family::so_pq;
      for (int side : {1, -1}) {
        for (int eta : cls.E) {
          int t = p.multiplicity(eta);
          if (so) {
            for (int l = 0; l < eta / 2; ++l) {
              auto w = B.even_so(eta, l, t, false);
              B.push(w, side > 0 ? 0 : t, side > 0 ? t : 2 * t);
            }
          } else {
            // <w, w> = -(-1)^l on every row
            for (int l = side > 0 ? 1 : 0; l < eta; l += 2)
              for (int j = 1; j <= t; ++j) B.push(B.even_sp_pq(eta, l, j));
          }
        }
        for (const auto* odd : {&cls.O1, &cls.O3})
          for (int th : *odd) {
            int t = p.multiplicity(th), pth = datum.p_of(th);
            for (int l = 0; l < th; ++l)
              for (int j = 1; j <= t; ++j)
                if (AdaptedBuilder::odd_real_sign(th, l, j <= pth ? 1 : -1) == side)
                  B.push(B.odd_real(th, l, j));
          }
      }
      return B.assemble(so ? Field::RealSqrt2 : Field::QuatSqrt2);
    }
    case Family::sp_c: {
      for (int side : {1, -1}) {
        for (int eta : cls.E) {
          int t = p.multiplicity(eta);
          for (int l = 0; l < eta / 2; ++l) {
            // even levels put X^l L first, odd levels put X^(eta-1-l) L first
            bool low_first = (l % 2 == 0) == (side > 0);
            int lev = low_first ? l : eta - 1 - l;
            for (int j = 1; j <= t; ++j) B.push({{B.at(eta, lev, j), Scalar(1)}});
          }
        }
        for (int th : cls.O) {
          int t = p.multiplicity(th), h = t / 2;
          for (int l = 0; l < th; ++l)
            for (int j = side > 0 ? 1 : h + 1; j <= (side > 0 ? h : t); ++j) B.push(B.odd_sp_c(th, l, j));
        }
      }
      return B.assemble(Field::Tower);
    }
    default: break;
  }
  throw std::logic_error("unreachable");
}

Partition jordan_type(const Matrix& x)
{
  if (!x.square()) throw ShapeError("jordan_type: square matrix required");
  Matrix r = realify(x);
  std::size_t deg = static_cast<std::size_t>(real_rank(x.field()));
  std::vector<std::size_t> ranks{r.rows()};
  Matrix pw = Matrix::identity(r.rows(), r.field());
  while (ranks.back() > 0) {
    pw = pw * r;
    std::size_t rk = rank(pw);
    if (rk == ranks.back()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    ranks.push_back(rk);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<int> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    std::size_t exact = (at_least - at_least_next) / deg;
    sizes.insert(sizes.end(), exact, static_cast<int>(k));
  }
  return Partition::from_sizes(sizes);
}

}  // namespace nilorb
