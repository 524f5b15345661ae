#include "nilorb/centralizer.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "nilorb/linalg.hpp"

namespace nilorb {

namespace {

// Unknowns: the real coordinates z[a][b][u] of Z = sum E_ab e_u, e_u in
// {1, i, j, k} truncated to the real rank of the scalar field.
class ConstraintSystem {
 public:
  ConstraintSystem(std::size_t n, int r) : n_(n), r_(r), solver_(n * n * static_cast<std::size_t>(r)) {}

  std::size_t col(std::size_t a, std::size_t b, int u) const
  {
    return (a * n_ + b) * static_cast<std::size_t>(r_) + static_cast<std::size_t>(u);
  }

  // [Z, M] = 0
  void commute(const Matrix& m)
  {
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t d = 0; d < n_; ++d) {
        std::vector<std::map<std::size_t, Rational>> rows(r_);
        for (std::size_t e = 0; e < n_; ++e) {
          if (!m(e, d).is_zero())
            for (int u = 0; u < r_; ++u) accumulate(rows, col(c, e, u), Scalar::unit(u) * m(e, d), 1);
          if (!m(c, e).is_zero())
            for (int u = 0; u < r_; ++u) accumulate(rows, col(e, d, u), m(c, e) * Scalar::unit(u), -1);
        }
        flush(rows);
      }
  }

  // form_adjoint(Z) S + S Z = 0; the left side is eps-Hermitian, so the
  // upper triangle carries all the equations
  void preserve(const Matrix& s, FormKind f)
  {
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t d = c; d < n_; ++d) {
        std::vector<std::map<std::size_t, Rational>> rows(r_);
        for (std::size_t e = 0; e < n_; ++e) {
          if (!s(e, d).is_zero())
            for (int u = 0; u < r_; ++u) {
              Scalar unit = Scalar::unit(u);
              if (f.sigma_conj) unit = unit.conj();
              accumulate(rows, col(e, c, u), unit * s(e, d), 1);
            }
          if (!s(c, e).is_zero())
            for (int u = 0; u < r_; ++u) accumulate(rows, col(e, d, u), s(c, e) * Scalar::unit(u), 1);
        }
        flush(rows);
      }
  }

  // sum over the diagonal of coordinate u
  void trace_component(int u)
  {
    SparseRank::Row row;
    for (std::size_t a = 0; a < n_; ++a) row.emplace_back(col(a, a, u), Integer(1));
    solver_.add_row(std::move(row));
  }

  int nullity() const { return static_cast<int>(solver_.nullity()); }

 private:
  void accumulate(std::vector<std::map<std::size_t, Rational>>& rows, std::size_t column,
                  const Scalar& value, int sign)
  {
    if (value[Scalar::kR] != 0 || value[Scalar::kIR] != 0 || value[Scalar::kJR] != 0 ||
        value[Scalar::kKR] != 0)
      throw std::logic_error("centralizer constraints must have entries without sqrt2");
    for (int v = 0; v < r_; ++v)
      if (value[v] != 0) rows[v][column] += sign * value[v];
  }

  void flush(std::vector<std::map<std::size_t, Rational>>& rows)
  {
    for (auto& row : rows) {
      Integer den = 1;
      for (const auto& [c, v] : row) den = lcm(den, Integer(v.get_den()));
      SparseRank::Row out;
      for (const auto& [c, v] : row)
        if (v != 0) out.emplace_back(c, Integer(v * den));
      if (!out.empty()) solver_.add_row(std::move(out));
    }
  }

  static Integer lcm(const Integer& a, const Integer& b)
  {
    Integer g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  std::size_t n_;
  int r_;
  SparseRank solver_;
};

int sum_over(const Partition& p, const std::function<int(int d, int t)>& f)
{
  int s = 0;
  for (const auto& [d, t] : p.parts()) s += f(d, t);
  return s;
}

}  // namespace

int solve_centralizer_dim(const AlgebraSpec& a, const Matrix* gram,
                          const std::vector<const Matrix*>& commute_with)
{
  std::size_t n = static_cast<std::size_t>(a.module_dim());
  int r = real_rank(a.scalar_field());
  ConstraintSystem sys(n, r);
  // H goes first when present: diagonal, so its rows are single-column pivots
  for (const Matrix* m : commute_with) sys.commute(*m);
  if (a.has_form()) {
    if (!gram) throw std::invalid_argument(a.name() + ": Gram matrix required");
    sys.preserve(*gram, a.form());
  } else if (a.family == Family::sl_c) {
    sys.trace_component(0);
    sys.trace_component(1);
  } else {
    sys.trace_component(0);
  }
  return sys.nullity();
}

int algebra_dim_by_kernel(const AlgebraSpec& a)
{
  std::optional<Matrix> s;
  if (a.has_form()) {
    OrbitDatum zero = OrbitDatum::plain(Partition::from_parts({{1, partition_size(a)}}));
    if (uses_signed_diagrams(a.family)) {
      int p1 = a.uses_signature() ? a.p : partition_size(a);
      zero = OrbitDatum::with_signs(SignedYoungDiagram(zero.partition, {p1}));
    }
    s = gram_matrix(a, zero);
  }
  return solve_centralizer_dim(a, s ? &*s : nullptr, {});
}

int centralizer_dim_triple(const Triple& t, const AlgebraSpec& a)
{
  return solve_centralizer_dim(a, t.gram ? &*t.gram : nullptr, {&t.H, &t.X, &t.Y});
}

int centralizer_dim_nilpotent(const Triple& t, const AlgebraSpec& a)
{
  return solve_centralizer_dim(a, t.gram ? &*t.gram : nullptr, {&t.X});
}

int orbit_dim(const AlgebraSpec& a, const OrbitDatum& d)
{
  if (d.is_zero_orbit()) return 0;
  return a.dim_g() - centralizer_dim_nilpotent(build_triple(a, d), a);
}

int expected_reductive_dim(const AlgebraSpec& a, const OrbitDatum& d)
{
  const Partition& p = d.partition;
  auto odd_even = [&](auto odd, auto even) {
    return sum_over(p, [&](int dd, int t) { return dd % 2 ? odd(t) : even(t); });
  };
  int sq = sum_over(p, [](int, int t) { return t * t; });
  switch (a.family) {
    case Family::sl_r: return sq - 1;
    case Family::sl_c: return 2 * sq - 2;
    case Family::sl_h: return 4 * sq - 1;
    case Family::so_c: return odd_even([](int t) { return t * (t - 1); }, [](int t) { return t * (t + 1); });
    case Family::so_pq:
      return odd_even([](int t) { return t * (t - 1) / 2; }, [](int t) { return t * (t + 1) / 2; });
    case Family::sp_c: return odd_even([](int t) { return t * (t + 1); }, [](int t) { return t * (t - 1); });
    case Family::sp_pq:
      return odd_even([](int t) { return t * (2 * t + 1); }, [](int t) { return t * (2 * t - 1); });
    case Family::so_star:
      return odd_even([](int t) { return t * (2 * t - 1); }, [](int t) { return t * (2 * t + 1); });
  }
  return 0;
}

int expected_compact_dim(const AlgebraSpec& a, const OrbitDatum& d)
{
  const Partition& p = d.partition;
  auto o = [](int k) { return k * (k - 1) / 2; };
  auto sp = [](int k) { return k * (2 * k + 1); };
  // p-side / q-side split of a part with signs
  auto split = [&](int dd, int t, auto f) { return f(d.p_of(dd)) + f(t - d.p_of(dd)); };
  switch (a.family) {
    case Family::sl_r: return sum_over(p, [&](int, int t) { return o(t); });
    case Family::sl_c: return sum_over(p, [](int, int t) { return t * t; }) - 1;
    case Family::sl_h: return sum_over(p, [&](int, int t) { return sp(t); });
    case Family::so_c:
      return sum_over(p, [&](int dd, int t) { return dd % 2 ? o(t) : sp(t / 2); });
    case Family::so_pq:
      return sum_over(p, [&](int dd, int t) { return dd % 2 ? split(dd, t, o) : (t / 2) * (t / 2); });
    case Family::sp_c:
      return sum_over(p, [&](int dd, int t) { return dd % 2 ? sp(t / 2) : o(t); });
    case Family::sp_pq:
      return sum_over(p, [&](int dd, int t) { return dd % 2 ? split(dd, t, sp) : t * t; });
    case Family::so_star:
      return sum_over(p, [&](int dd, int t) { return dd % 2 ? t * t : split(dd, t, sp); });
  }
  return 0;
}

CentralizerReport centralizer_report(const AlgebraSpec& a, const OrbitDatum& d)
{
  CentralizerReport r;
  r.dim_g = a.dim_g();
  if (d.is_zero_orbit()) {
    r.dim_z_triple = r.dim_z_X = r.dim_g;
  } else {
    Triple t = build_triple(a, d);
    r.dim_z_triple = centralizer_dim_triple(t, a);
    r.dim_z_X = centralizer_dim_nilpotent(t, a);
  }
  r.dim_orbit = r.dim_g - r.dim_z_X;
  r.expected_reductive = expected_reductive_dim(a, d);
  r.expected_compact = expected_compact_dim(a, d);
  r.match = r.dim_z_triple == r.expected_reductive;
  return r;
}

}  // namespace nilorb
