#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nilorb {

using Rational = mpq_class;
using Integer = mpz_class;

// Scalar fields, ordered loosely by size. RealSqrt2 (the real subfield
// Q(sqrt2)) is where realified tower matrices land.
enum class Field : std::uint8_t { Rational, RealSqrt2, Gauss, Tower, Quat, QuatSqrt2 };

std::string_view field_name(Field f);
Field field_from_name(std::string_view s);

// smallest field containing both
Field join(Field a, Field b);
bool contains(Field outer, Field inner);
bool is_quaternionic(Field f);
bool is_complex_like(Field f);  // Gauss or Tower
// real dimension of the field over its real subfield: 1, 2 or 4
int real_rank(Field f);

// Element of the quaternions over Q(sqrt2). Components are indexed in the
// order {1, i, j, k, r, ir, jr, kr} with r = sqrt2; every smaller field sits
// inside as a subset of components (complex i is the quaternion i).
class Scalar {
 public:
  static constexpr int kOne = 0, kI = 1, kJ = 2, kK = 3, kR = 4, kIR = 5, kJR = 6, kKR = 7;

  Scalar() = default;
  Scalar(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) { c_[0] = r; }  // NOLINT(google-explicit-constructor)

  static Scalar unit(int idx);
  static Scalar i() { return unit(kI); }
  static Scalar j() { return unit(kJ); }
  static Scalar k() { return unit(kK); }
  static Scalar sqrt2() { return unit(kR); }
  static Scalar gauss(const Rational& re, const Rational& im);
  static Scalar quat(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  const Rational& operator[](int idx) const { return c_[idx]; }
  void set(int idx, const Rational& v) { c_[idx] = v; }

  bool is_zero() const;
  bool is_rational() const;  // only the 1-component may be nonzero
  bool is_real() const;      // lies in Q(sqrt2)
  Field field() const;

  // sigma_c: negates i, j, k and fixes sqrt2
  Scalar conj() const;
  // quaternion norm x * conj(x), an element of Q(sqrt2)
  Scalar norm() const;
  // real part (components 1 and sqrt2)
  Scalar real_part() const;
  Scalar inverse() const;
  // sign of a nonzero real value; 0 for zero
  int sign() const;
  const Rational& rational() const;  // throws unless is_rational()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // a * b^{-1}
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<Rational, 8> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// "num/den" with den > 0 (integers keep the /1)
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace nilorb
