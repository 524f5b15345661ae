#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorb/scalar.hpp"

namespace nilorb {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense matrix over one field of the scalar tower. Matrices act on column
// vectors from the left; vectors are scaled from the right.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::Rational);

  static Matrix identity(std::size_t n, Field f = Field::Rational);
  // field is the join of all entries unless given
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field f);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  // checked write: the entry must lie in the matrix field
  void set(std::size_t i, std::size_t j, const Scalar& s);
  // write without the field check, for internal loops that cannot leave the field
  Scalar& raw(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  bool is_zero() const;
  // smallest field holding all entries
  Field entry_field() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::Rational;
  std::vector<Scalar> a_;
};

// Same entries, larger field. Throws FieldMismatch if `f` does not contain A's field.
std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix promote(const Matrix& a, Field f);
// Re-tag with the smallest field holding the entries.
Matrix tighten(const Matrix& a);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix neg(const Matrix& a);
// A * s entrywise (scalar on the right)
Matrix scale(const Matrix& a, const Scalar& s);
// [A, B] = AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned k);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator-(const Matrix& a) { return neg(a); }

Matrix transpose(const Matrix& a);
Matrix conj_transpose(const Matrix& a);
// entrywise sigma_c
Matrix conj(const Matrix& a);

// S + iT  ->  [[S, -T], [T, S]]; A must be complex-like or real
Matrix embed_C_in_R(const Matrix& a);
// P + jQ  ->  [[P, -conj Q], [Q, conj P]]; A may be quaternionic or smaller
Matrix embed_H_in_C(const Matrix& a);
// composite down to Q or Q(sqrt2); identity on real matrices
Matrix realify(const Matrix& a);

Matrix block_oplus(const std::vector<Matrix>& blocks);
Matrix repeat_blocks(const Matrix& b, std::size_t s);
// copy of rows [r0, r0+nr) x cols [c0, c0+nc)
Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
// write b into a at (r0, c0)
void place(Matrix& a, const Matrix& b, std::size_t r0, std::size_t c0);

Scalar trace(const Matrix& a);
// determinant over a commutative field (not quaternionic)
Scalar det(const Matrix& a);
// Gauss-Jordan inverse; works over the quaternions too. Throws on singular input.
Matrix inverse(const Matrix& a);

// 2 * sum of real parts of the diagonal
Scalar reduced_trace(const Matrix& a);
// determinant of the complex image
Scalar reduced_norm(const Matrix& a);

}  // namespace nilorb
