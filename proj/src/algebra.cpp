#include "nilorb/algebra.hpp"

namespace nilorb {

namespace {

constexpr std::string_view kNames[] = {"sl_r",  "sl_c",  "sl_h",  "so_c",
                                       "so_pq", "sp_c", "sp_pq", "so_star"};

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<int>(f)]; }

Family family_from_name(std::string_view s)
{
  for (int k = 0; k < 8; ++k)
    if (kNames[k] == s) return static_cast<Family>(k);
  throw std::invalid_argument("unknown algebra family: " + std::string(s));
}

AlgebraSpec AlgebraSpec::make(Family f, int n)
{
  AlgebraSpec a;
  a.family = f;
  a.n = n;
  if (a.uses_signature()) throw InvalidAlgebra(std::string(family_name(f)) + " takes (p, q)");
  validate(a);
  return a;
}

AlgebraSpec AlgebraSpec::make_pq(Family f, int p, int q)
{
  AlgebraSpec a;
  a.family = f;
  a.p = p;
  a.q = q;
  a.n = p + q;
  if (!a.uses_signature()) throw InvalidAlgebra(std::string(family_name(f)) + " takes n");
  validate(a);
  return a;
}

bool AlgebraSpec::is_sl() const
{
  return family == Family::sl_r || family == Family::sl_c || family == Family::sl_h;
}

bool AlgebraSpec::low_rank() const
{
  return (family == Family::so_c || family == Family::so_pq) && n < 5;
}

Field AlgebraSpec::scalar_field() const
{
  switch (family) {
    case Family::sl_r:
    case Family::so_pq: return Field::Rational;
    case Family::sl_c:
    case Family::so_c:
    case Family::sp_c: return Field::Gauss;
    case Family::sl_h:
    case Family::sp_pq:
    case Family::so_star: return Field::Quat;
  }
  return Field::Rational;
}

int AlgebraSpec::module_dim() const { return family == Family::sp_c ? 2 * n : n; }

std::string AlgebraSpec::name() const
{
  std::string s(family_name(family));
  if (uses_signature()) return s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return s + "(" + std::to_string(n) + ")";
}

FormKind AlgebraSpec::form() const
{
  switch (family) {
    case Family::so_c:
    case Family::so_pq: return {1, false};
    case Family::sp_c: return {-1, false};
    case Family::sp_pq: return {1, true};
    case Family::so_star: return {-1, true};
    default: throw std::logic_error(name() + " carries no invariant form");
  }
}

int AlgebraSpec::dim_g() const
{
  switch (family) {
    case Family::sl_r: return n * n - 1;
    case Family::sl_c: return 2 * (n * n - 1);
    case Family::sl_h: return 4 * n * n - 1;
    case Family::so_c: return n * (n - 1);
    case Family::so_pq: return n * (n - 1) / 2;
    case Family::sp_c: return 2 * n * (2 * n + 1);
    case Family::sp_pq: return n * (2 * n + 1);
    case Family::so_star: return n * (2 * n - 1);
  }
  return 0;
}

void validate(const AlgebraSpec& a)
{
  auto fail = [&](const std::string& why) { throw InvalidAlgebra(a.name() + ": " + why); };
  if (a.uses_signature()) {
    if (a.p < 0 || a.q < 0) fail("p and q must be non-negative");
    if (a.n != a.p + a.q) fail("n must equal p + q");
    if (a.family == Family::so_pq && a.n < 3) fail("p + q must be at least 3");
    if (a.family == Family::sp_pq && (a.p < 1 || a.q < 1)) fail("p and q must be positive");
  } else {
    if (a.n < 1) fail("n must be positive");
    if (a.family == Family::so_c && a.n < 3) fail("n must be at least 3");
  }
  if (a.module_dim() > 64) fail("module dimension above 64");
}

}  // namespace nilorb
