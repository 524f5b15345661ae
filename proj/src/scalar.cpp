#include "nilorb/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace nilorb {

namespace {

// Quaternion unit products e_a * e_b = kSign[a][b] * e_{kIndex[a][b]}.
constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

constexpr std::string_view kFieldNames[] = {"rational", "real_sqrt2", "gauss",
                                            "tower",    "quat",       "quat_sqrt2"};

struct Traits {
  bool i, j, r;
};

Traits traits(Field f)
{
  switch (f) {
    case Field::Rational: return {false, false, false};
    case Field::RealSqrt2: return {false, false, true};
    case Field::Gauss: return {true, false, false};
    case Field::Tower: return {true, false, true};
    case Field::Quat: return {true, true, false};
    case Field::QuatSqrt2: return {true, true, true};
  }
  return {true, true, true};
}

Field from_traits(Traits t)
{
  if (t.j) return t.r ? Field::QuatSqrt2 : Field::Quat;
  if (t.i) return t.r ? Field::Tower : Field::Gauss;
  return t.r ? Field::RealSqrt2 : Field::Rational;
}

}  // namespace

std::string_view field_name(Field f) { return kFieldNames[static_cast<int>(f)]; }

Field field_from_name(std::string_view s)
{
  for (int k = 0; k < 6; ++k)
    if (kFieldNames[k] == s) return static_cast<Field>(k);
  throw std::invalid_argument("unknown scalar field: " + std::string(s));
}

Field join(Field a, Field b)
{
  Traits x = traits(a), y = traits(b);
  return from_traits({x.i || y.i || x.j || y.j, x.j || y.j, x.r || y.r});
}

bool contains(Field outer, Field inner) { return join(outer, inner) == outer; }

bool is_quaternionic(Field f) { return traits(f).j; }

bool is_complex_like(Field f) { return traits(f).i && !traits(f).j; }

int real_rank(Field f)
{
  Traits t = traits(f);
  return t.j ? 4 : (t.i ? 2 : 1);
}

Scalar Scalar::unit(int idx)
{
  Scalar s;
  s.c_[idx] = 1;
  return s;
}

Scalar Scalar::gauss(const Rational& re, const Rational& im)
{
  Scalar s;
  s.c_[kOne] = re;
  s.c_[kI] = im;
  return s;
}

Scalar Scalar::quat(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
{
  Scalar s;
  s.c_[kOne] = a;
  s.c_[kI] = b;
  s.c_[kJ] = c;
  s.c_[kK] = d;
  return s;
}

bool Scalar::is_zero() const
{
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Scalar::is_rational() const
{
  for (int k = 1; k < 8; ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

bool Scalar::is_real() const
{
  for (int k : {1, 2, 3, 5, 6, 7})
    if (sgn(c_[k]) != 0) return false;
  return true;
}

Field Scalar::field() const
{
  auto nz = [this](int k) { return sgn(c_[k]) != 0; };
  Traits t;
  t.j = nz(kJ) || nz(kK) || nz(kJR) || nz(kKR);
  t.i = t.j || nz(kI) || nz(kIR);
  t.r = nz(kR) || nz(kIR) || nz(kJR) || nz(kKR);
  return from_traits(t);
}

Scalar Scalar::conj() const
{
  Scalar s = *this;
  for (int k : {1, 2, 3, 5, 6, 7}) s.c_[k] = -s.c_[k];
  return s;
}

Scalar Scalar::norm() const
{
  // (a + b r)(conj a + conj b r) with a, b rational quaternions; the result
  // is |a|^2 + 2|b|^2 + (a conj b + b conj a) r, both parts real.
  Scalar s;
  for (int k = 0; k < 4; ++k) {
    s.c_[kOne] += c_[k] * c_[k] + 2 * c_[k + 4] * c_[k + 4];
    s.c_[kR] += 2 * c_[k] * c_[k + 4];
  }
  return s;
}

Scalar Scalar::real_part() const
{
  Scalar s;
  s.c_[kOne] = c_[kOne];
  s.c_[kR] = c_[kR];
  return s;
}

Scalar Scalar::inverse() const
{
  Scalar n = norm();
  const Rational& a = n.c_[kOne];
  const Rational& b = n.c_[kR];
  Rational den = a * a - 2 * b * b;
  if (sgn(den) == 0) throw std::domain_error("division by zero scalar");
  // 1/(a + b r) = (a - b r)/(a^2 - 2 b^2)
  Scalar ninv;
  ninv.c_[kOne] = a / den;
  ninv.c_[kR] = -b / den;
  return conj() * ninv;
}

int Scalar::sign() const
{
  if (!is_real()) throw std::domain_error("sign of a non-real scalar");
  int sa = sgn(c_[kOne]), sb = sgn(c_[kR]);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = c_[kOne] * c_[kOne], rhs = 2 * c_[kR] * c_[kR];
  return lhs > rhs ? sa : sb;
}

const Rational& Scalar::rational() const
{
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return c_[kOne];
}

Scalar Scalar::operator-() const
{
  Scalar s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
  for (int k = 0; k < 8; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
  for (int k = 0; k < 8; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
  Scalar out;
  Rational tmp;
  for (int x = 0; x < 8; ++x) {
    if (sgn(a.c_[x]) == 0) continue;
    for (int y = 0; y < 8; ++y) {
      if (sgn(b.c_[y]) == 0) continue;
      int qa = x & 3, qb = y & 3;
      int roots = (x >> 2) + (y >> 2);
      int idx = kIndex[qa][qb] + (roots == 1 ? 4 : 0);
      int factor = kSign[qa][qb] * (roots == 2 ? 2 : 1);
      tmp = a.c_[x] * b.c_[y];
      if (factor == 1)
        out.c_[idx] += tmp;
      else if (factor == -1)
        out.c_[idx] -= tmp;
      else
        out.c_[idx] += factor * tmp;
    }
  }
  return out;
}

std::string Scalar::to_string() const
{
  static const char* names[] = {"", "i", "j", "k", "r2", "i*r2", "j*r2", "k*r2"};
  std::string s;
  for (int k = 0; k < 8; ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::string coef = c_[k].get_str();
    if (!s.empty() && coef[0] != '-') s += "+";
    if (k == 0)
      s += coef;
    else if (c_[k] == 1)
      s += names[k];
    else if (c_[k] == -1)
      s += std::string("-") + names[k];
    else
      s += coef + "*" + names[k];
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string rational_to_string(const Rational& r)
{
  Rational c(r);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s)
{
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace nilorb
