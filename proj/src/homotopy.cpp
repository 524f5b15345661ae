#include "nilorb/homotopy.hpp"

#include "nilorb/centralizer.hpp"

namespace nilorb {

namespace {

std::string x(int k) { return "x" + std::to_string(k); }

std::string pq_pattern(int p_count, int q_count)
{
  return "p:" + x(p_count) + " q:" + x(q_count);
}

FactorKind compact_kind(Family f)
{
  switch (f) {
    case Family::sl_r:
    case Family::so_pq: return FactorKind::O;
    case Family::sl_c: return FactorKind::U;
    default: return FactorKind::Sp;
  }
}

std::vector<FactorSpec> factor_table(const AlgebraSpec& a, const OrbitDatum& d)
{
  const Partition& p = d.partition;
  PartitionClasses cls = classify(p);
  std::vector<FactorSpec> out;
  auto add = [&](FactorKind k, int size, int part, char role, std::string pattern) {
    out.push_back({k, size, part, role, std::move(pattern)});
  };
  // odd rows of so_pq / sp_pq: a p-row factor and a q-row factor per part
  auto add_odd_pq = [&](FactorKind k) {
    for (int th : cls.O1) {
      int t = p.multiplicity(th), pt = d.p_of(th);
      add(k, pt, th, 'C', pq_pattern((th + 1) / 2, (th - 1) / 2));
      add(k, t - pt, th, 'D', pq_pattern((th - 1) / 2, (th + 1) / 2));
    }
    for (int ze : cls.O3) {
      int t = p.multiplicity(ze), pt = d.p_of(ze);
      add(k, pt, ze, 'E', pq_pattern((ze - 1) / 2, (ze + 1) / 2));
      add(k, t - pt, ze, 'F', pq_pattern((ze + 1) / 2, (ze - 1) / 2));
    }
  };

  switch (a.family) {
    case Family::sl_r:
    case Family::sl_c:
    case Family::sl_h:
      for (const auto& [dd, t] : p.parts()) add(compact_kind(a.family), t, dd, 'G', x(dd));
      break;
    case Family::so_c:
      for (int eta : cls.E) add(FactorKind::Sp, p.multiplicity(eta) / 2, eta, 'A', "pC.pH " + x(eta / 2));
      for (int th : cls.O) add(FactorKind::O, p.multiplicity(th), th, 'C', x(th));
      break;
    case Family::so_pq:
      for (int eta : cls.E)
        add(FactorKind::U, p.multiplicity(eta) / 2, eta, 'A', "pC " + pq_pattern(eta / 2, eta / 2));
      add_odd_pq(FactorKind::O);
      break;
    case Family::sp_c:
      for (int eta : cls.E) add(FactorKind::O, p.multiplicity(eta), eta, 'A', x(eta / 2));
      for (int th : cls.O) add(FactorKind::Sp, p.multiplicity(th) / 2, th, 'C', x(th));
      break;
    case Family::sp_pq:
      for (int eta : cls.E)
        add(FactorKind::U, p.multiplicity(eta), eta, 'A', "Re+jIm " + pq_pattern(eta / 2, eta / 2));
      add_odd_pq(FactorKind::Sp);
      break;
    case Family::so_star:
      for (int th : cls.O) add(FactorKind::U, p.multiplicity(th), th, 'A', "");
      for (int eta : cls.E) {
        add(FactorKind::Sp, d.p_of(eta), eta, 'C', "");
        add(FactorKind::Sp, p.multiplicity(eta) - d.p_of(eta), eta, 'D', "");
      }
      break;
  }
  return out;
}

std::string join_factors(const std::vector<FactorSpec>& fs, bool (*keep)(const FactorSpec&))
{
  std::string s;
  for (const auto& f : fs) {
    if (f.size == 0 || !keep(f)) continue;
    if (!s.empty()) s += " × ";
    s += f.to_string();
  }
  return s;
}

bool any_factor(const FactorSpec&) { return true; }
bool is_orthogonal(const FactorSpec& f) { return f.kind == FactorKind::O; }
bool not_orthogonal(const FactorSpec& f) { return f.kind != FactorKind::O; }

Rational random_rational(std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Scalar random_entry(Field f, std::mt19937_64& rng)
{
  Scalar s;
  for (int u = 0; u < real_rank(f); ++u) s.set(u, random_rational(rng));
  return s;
}

// a + b i  ->  a + b j
Matrix complex_as_quaternion(const Matrix& m)
{
  Matrix out(m.rows(), m.cols(), Field::Quat);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.raw(r, c) = Scalar::quat(m(r, c)[Scalar::kOne], 0, m(r, c)[Scalar::kI], 0);
  return out;
}

struct Blocks {
  std::vector<Matrix> items;
  void add(const Matrix& m, int times)
  {
    for (int k = 0; k < times; ++k) items.push_back(m);
  }
  Matrix build(Field f) const { return promote(block_oplus(items), f); }
};

void check_shapes(const std::vector<FactorSpec>& table, const KElement& e)
{
  if (table.size() != e.factors.size())
    throw ShapeError("K element has " + std::to_string(e.factors.size()) + " factors, expected " +
                     std::to_string(table.size()));
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Matrix& m = e.factors[k];
    auto want = static_cast<std::size_t>(table[k].size);
    if (m.rows() != want || m.cols() != want || !contains(table[k].field(), m.field()))
      throw ShapeError("K factor " + std::to_string(k) + " does not fit " + table[k].to_string());
  }
}

// p- and q-side blocks of the odd parts of so_pq / sp_pq, in factor table order
void odd_pq_blocks(const std::vector<FactorSpec>& table, const KElement& e, Blocks& bp, Blocks& bq)
{
  for (std::size_t k = 0; k < table.size(); ++k) {
    char role = table[k].role;
    if (role != 'C' && role != 'E') continue;
    const Matrix& first = e.factors[k];       // C or E
    const Matrix& second = e.factors[k + 1];  // D or F
    int th = table[k].part;
    auto pattern = [&](Blocks& b, const Matrix& u, const Matrix& v) {
      if (role == 'C') {
        // (u + v)^((th-1)/4) + u + (u + v)^((th-1)/4)
        for (int r = 0; r < (th - 1) / 4; ++r) b.add(u, 1), b.add(v, 1);
        b.add(u, 1);
        for (int r = 0; r < (th - 1) / 4; ++r) b.add(u, 1), b.add(v, 1);
      } else {
        // (u + v)^((th+1)/4) + (v + u)^((th-3)/4) + v
        for (int r = 0; r < (th + 1) / 4; ++r) b.add(u, 1), b.add(v, 1);
        for (int r = 0; r < (th - 3) / 4; ++r) b.add(v, 1), b.add(u, 1);
        b.add(v, 1);
      }
    };
    pattern(bp, first, second);
    pattern(bq, second, first);
  }
}

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.rows(), m.field()); }

}  // namespace

std::string_view factor_kind_name(FactorKind k)
{
  switch (k) {
    case FactorKind::U: return "U";
    case FactorKind::O: return "O";
    case FactorKind::Sp: return "Sp";
  }
  return "";
}

FactorKind factor_kind_from_name(std::string_view s)
{
  if (s == "U") return FactorKind::U;
  if (s == "O") return FactorKind::O;
  if (s == "Sp") return FactorKind::Sp;
  throw std::invalid_argument("unknown factor kind: " + std::string(s));
}

Field FactorSpec::field() const
{
  switch (kind) {
    case FactorKind::U: return Field::Gauss;
    case FactorKind::O: return Field::Rational;
    case FactorKind::Sp: return Field::Quat;
  }
  return Field::Rational;
}

int FactorSpec::real_dim() const
{
  switch (kind) {
    case FactorKind::U: return size * size;
    case FactorKind::O: return size * (size - 1) / 2;
    case FactorKind::Sp: return size * (2 * size + 1);
  }
  return 0;
}

std::string FactorSpec::to_string() const
{
  return std::string(factor_kind_name(kind)) + "(" + std::to_string(size) + ")";
}

std::string_view constraint_name(Constraint c)
{
  switch (c) {
    case Constraint::None: return "none";
    case Constraint::Chi: return "chi=1";
    case Constraint::ChiPQ: return "chi_p=chi_q=1";
  }
  return "";
}

Constraint constraint_from_name(std::string_view s)
{
  for (Constraint c : {Constraint::None, Constraint::Chi, Constraint::ChiPQ})
    if (constraint_name(c) == s) return c;
  throw std::invalid_argument("unknown constraint: " + std::string(s));
}

std::string HomotopyType::render() const
{
  std::string k;
  if (ambient.rfind("SO(", 0) == 0 && constraint == Constraint::Chi && factors.size() &&
      factors.front().role != 'G') {
    // so_c: the character only sees the orthogonal factors
    std::string rest = join_factors(factors, not_orthogonal);
    std::string o = join_factors(factors, is_orthogonal);
    k = rest;
    if (!o.empty()) k += (k.empty() ? "" : " × ") + ("S(" + o + ")");
  } else {
    k = join_factors(factors, any_factor);
    if (constraint == Constraint::Chi) k = "(" + k + ")_{χ=1}";
    if (constraint == Constraint::ChiPQ) k = "(" + k + ")_{χp=χq=1}";
  }
  if (k.empty()) k = "{1}";
  if (k.front() != '(' && k.front() != '{') k = "(" + k + ")";
  std::string m = ambient.find(" × ") == std::string::npos ? ambient : "(" + ambient + ")";
  return m + " / " + k;
}

HomotopyType compact_pair(const AlgebraSpec& a, const OrbitDatum& d)
{
  if (auto why = membership_violation(a, d)) throw NotInParametrizingSet(*why);
  HomotopyType h;
  h.factors = factor_table(a, d);
  int n = a.n;
  std::string ns = std::to_string(n);
  auto so = [](int k) { return k * (k - 1) / 2; };
  auto sp = [](int k) { return k * (2 * k + 1); };
  switch (a.family) {
    case Family::sl_r: h.ambient = "SO(" + ns + ")", h.dim_M = so(n), h.constraint = Constraint::Chi; break;
    case Family::sl_c: h.ambient = "SU(" + ns + ")", h.dim_M = n * n - 1, h.constraint = Constraint::Chi; break;
    case Family::sl_h: h.ambient = "Sp(" + ns + ")", h.dim_M = sp(n); break;
    case Family::so_c: h.ambient = "SO(" + ns + ")", h.dim_M = so(n), h.constraint = Constraint::Chi; break;
    case Family::so_pq:
      h.ambient = "SO(" + std::to_string(a.p) + ") × SO(" + std::to_string(a.q) + ")";
      h.dim_M = so(a.p) + so(a.q);
      h.constraint = Constraint::ChiPQ;
      break;
    case Family::sp_c: h.ambient = "Sp(" + ns + ")", h.dim_M = sp(n); break;
    case Family::sp_pq:
      h.ambient = "Sp(" + std::to_string(a.p) + ") × Sp(" + std::to_string(a.q) + ")";
      h.dim_M = sp(a.p) + sp(a.q);
      break;
    case Family::so_star:
      h.ambient = "U(" + ns + ")", h.dim_M = n * n;
      h.embedding_available = false;
      break;
  }
  for (const auto& f : h.factors) h.dim_K += f.real_dim();
  // det: U(1) -> U(1) is onto, so only sl_c loses a dimension to its character
  if (a.family == Family::sl_c) h.dim_K -= 1;
  h.dim_quotient = h.dim_M - h.dim_K;
  if (a.family == Family::so_pq) {
    std::string k = join_factors(h.factors, any_factor);
    h.auxiliary = "S(O(" + std::to_string(a.p) + ") × O(" + std::to_string(a.q) + ")) / (" +
                  (k.empty() ? "{1}" : k) + ")_{χp·χq=1}";
  }
  return h;
}

int quotient_dim(const AlgebraSpec& a, const OrbitDatum& d) { return compact_pair(a, d).dim_quotient; }

KElement identity_element(const AlgebraSpec& a, const OrbitDatum& d)
{
  KElement e;
  for (const auto& f : factor_table(a, d)) e.factors.push_back(Matrix::identity(f.size, f.field()));
  return e;
}

KElement operator*(const KElement& g, const KElement& h)
{
  if (g.factors.size() != h.factors.size()) throw ShapeError("K elements of different shape");
  KElement out;
  for (std::size_t k = 0; k < g.factors.size(); ++k) out.factors.push_back(g.factors[k] * h.factors[k]);
  return out;
}

Matrix cayley(const Matrix& skew)
{
  Matrix id = Matrix::identity(skew.rows(), skew.field());
  return (id - skew) * inverse(id + skew);
}

Matrix random_factor_point(FactorKind kind, int size, std::mt19937_64& rng)
{
  Field f = FactorSpec{kind, size, 0, 'G', ""}.field();
  auto n = static_cast<std::size_t>(size);
  Matrix a(n, n, f);
  for (std::size_t r = 0; r < n; ++r) {
    Scalar diag = random_entry(f, rng);
    diag.set(Scalar::kOne, 0);  // purely imaginary
    a.raw(r, r) = diag;
    for (std::size_t c = r + 1; c < n; ++c) {
      Scalar v = random_entry(f, rng);
      a.raw(r, c) = v;
      a.raw(c, r) = -v.conj();
    }
  }
  Matrix g = cayley(a);
  if (kind == FactorKind::O && size > 0 && std::bernoulli_distribution(0.5)(rng)) {
    Matrix flip = Matrix::identity(n, f);
    flip.raw(0, 0) = Scalar(-1);
    g = flip * g;
  }
  return g;
}

KElement random_element(const AlgebraSpec& a, const OrbitDatum& d, std::mt19937_64& rng)
{
  KElement e;
  for (const auto& f : factor_table(a, d)) e.factors.push_back(random_factor_point(f.kind, f.size, rng));
  return e;
}

KElement random_factor_matrices(const AlgebraSpec& a, const OrbitDatum& d, std::mt19937_64& rng)
{
  KElement e;
  for (const auto& f : factor_table(a, d)) {
    auto n = static_cast<std::size_t>(f.size);
    Matrix m(n, n, f.field());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.raw(r, c) = random_entry(f.field(), rng);
    e.factors.push_back(m);
  }
  return e;
}

std::pair<Matrix, Matrix> embed_K_pq(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e)
{
  if (!a.uses_signature()) throw std::logic_error(a.name() + " has no p/q splitting");
  auto table = factor_table(a, d);
  check_shapes(table, e);
  bool so = a.family == Family::so_pq;
  Blocks bp, bq;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].role != 'A') continue;
    int eta = table[k].part;
    Matrix block = so ? embed_C_in_R(e.factors[k]) : complex_as_quaternion(e.factors[k]);
    bp.add(block, eta / 2);
    bq.add(block, eta / 2);
  }
  odd_pq_blocks(table, e, bp, bq);
  Field f = so ? Field::Rational : Field::Quat;
  return {bp.build(f), bq.build(f)};
}

Matrix embed_K(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e)
{
  auto table = factor_table(a, d);
  check_shapes(table, e);
  Blocks b;
  switch (a.family) {
    case Family::sl_r:
    case Family::sl_c:
    case Family::sl_h:
      for (std::size_t k = 0; k < table.size(); ++k) b.add(e.factors[k], table[k].part);
      return b.build(a.scalar_field());
    case Family::so_c:
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k].role == 'A')
          b.add(embed_C_in_R(embed_H_in_C(e.factors[k])), table[k].part / 2);
        else
          b.add(e.factors[k], table[k].part);
      }
      return b.build(Field::Rational);
    case Family::sp_c:
      for (std::size_t k = 0; k < table.size(); ++k)
        b.add(e.factors[k], table[k].role == 'A' ? table[k].part / 2 : table[k].part);
      return b.build(Field::Quat);
    case Family::so_pq:
    case Family::sp_pq: {
      auto [dp, dq] = embed_K_pq(a, d, e);
      return block_oplus({dp, dq});
    }
    case Family::so_star: break;
  }
  throw Unsupported("no explicit embedding of the compact centralizer for " + a.name());
}

Matrix embed_K_on_module(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e)
{
  Matrix m = embed_K(a, d, e);
  return a.family == Family::sp_c ? embed_H_in_C(m) : m;
}

std::vector<Scalar> chi(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e)
{
  auto table = factor_table(a, d);
  check_shapes(table, e);
  auto pow = [](Scalar s, int k) {
    Scalar out(1);
    for (int r = 0; r < k; ++r) out = out * s;
    return out;
  };
  switch (a.family) {
    case Family::sl_r:
    case Family::sl_c: {
      Scalar c(1);
      for (std::size_t k = 0; k < table.size(); ++k) c = c * pow(det(e.factors[k]), table[k].part);
      return {c};
    }
    case Family::so_c: {
      Scalar c(1);
      for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k].role == 'C') c = c * det(e.factors[k]);
      return {c};
    }
    case Family::so_pq: {
      Scalar cp(1), cq(1);
      for (std::size_t k = 0; k < table.size(); ++k) {
        Scalar v = table[k].role == 'A' ? pow(det(embed_C_in_R(e.factors[k])), table[k].part / 2)
                                        : det(e.factors[k]);
        if (table[k].role != 'D' && table[k].role != 'F') cp = cp * v;
        if (table[k].role != 'C' && table[k].role != 'E') cq = cq * v;
      }
      return {cp, cq};
    }
    default: return {};
  }
}

MembershipResult verify_K_membership(const AlgebraSpec& a, const OrbitDatum& d, const KElement& e,
                                     const Triple& t, const Matrix& T)
{
  auto fail = [](std::string what) { return MembershipResult{false, std::move(what)}; };
  Matrix gh = embed_K_on_module(a, d, e);
  if (!is_identity(conj_transpose(gh) * gh)) return fail("image is not unitary");

  Matrix gb = gh;
  if (!a.is_sl()) {
    Field f = join(T.field(), gh.field());
    Matrix tf = promote(T, f);
    gb = tf * promote(gh, f) * inverse(tf);
  }
  Field f = gb.field();
  const char* names[] = {"[g,X]=0", "[g,H]=0", "[g,Y]=0"};
  const Matrix* ms[] = {&t.X, &t.H, &t.Y};
  for (int k = 0; k < 3; ++k)
    if (!commutator(gb, promote(*ms[k], f)).is_zero()) return fail(names[k]);
  if (t.gram) {
    Matrix s = promote(*t.gram, f);
    if (form_adjoint(gb, *t.form) * s * gb != s) return fail("g preserves the Gram matrix");
  }

  Scalar one(1);
  Scalar dt = is_quaternionic(f) ? reduced_norm(gb) : det(gb);
  std::vector<Scalar> c = chi(a, d, e);
  switch (a.family) {
    case Family::sl_r:
    case Family::sl_c:
    case Family::so_c:
      if ((dt == one) != (c[0] == one)) return fail("det(g)=1 iff chi=1");
      break;
    case Family::so_pq: {
      if ((dt == one) != (c[0] * c[1] == one)) return fail("det(g)=1 iff chi_p*chi_q=1");
      auto [dp, dq] = embed_K_pq(a, d, e);
      if (det(dp) != c[0]) return fail("det(D_p)=chi_p");
      if (det(dq) != c[1]) return fail("det(D_q)=chi_q");
      break;
    }
    default:
      if (dt != one) return fail(is_quaternionic(f) ? "Nrd(g)=1" : "det(g)=1");
  }
  return {};
}

}  // namespace nilorb
