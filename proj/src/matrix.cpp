#include "nilorb/matrix.hpp"

#include <sstream>

namespace nilorb {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape mismatch");
  if (a.field() != b.field())
    throw FieldMismatch(std::string(op) + ": mixed scalar fields " +
                        std::string(field_name(a.field())) + " and " +
                        std::string(field_name(b.field())));
}

Field complex_image(Field f)
{
  if (f == Field::Quat) return Field::Gauss;
  if (f == Field::QuatSqrt2) return Field::Tower;
  return f;
}

Field real_image(Field f)
{
  return contains(f, Field::RealSqrt2) ? Field::RealSqrt2 : Field::Rational;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols)
{
}

Matrix Matrix::identity(std::size_t n, Field f)
{
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows)
{
  Field f = Field::Rational;
  for (const auto& r : rows)
    for (const auto& s : r) f = join(f, s.field());
  return from_rows(rows, f);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field f)
{
  std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
  Matrix m(nr, nc, f);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows)
{
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return from_rows(v, Field::Rational);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s)
{
  if (!contains(field_, s.field()))
    throw FieldMismatch("entry " + s.to_string() + " outside field " +
                        std::string(field_name(field_)));
  a_[i * cols_ + j] = s;
}

bool Matrix::is_zero() const
{
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Field Matrix::entry_field() const
{
  Field f = Field::Rational;
  for (const auto& s : a_) f = join(f, s.field());
  return f;
}

bool operator==(const Matrix& a, const Matrix& b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::to_string() const
{
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix promote(const Matrix& a, Field f)
{
  if (!contains(f, a.field()))
    throw FieldMismatch("cannot demote " + std::string(field_name(a.field())) + " to " +
                        std::string(field_name(f)));
  Matrix m(a.rows(), a.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.raw(i, j) = a(i, j);
  return m;
}

Matrix tighten(const Matrix& a)
{
  Matrix m(a.rows(), a.cols(), a.entry_field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.raw(i, j) = a(i, j);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
  if (a.cols() != b.rows()) throw ShapeError("mat_mul: inner dimension mismatch");
  if (a.field() != b.field())
    throw FieldMismatch("mat_mul: mixed scalar fields " + std::string(field_name(a.field())) +
                        " and " + std::string(field_name(b.field())));
  Matrix c(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c.raw(i, j) += x * y;
      }
    }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b)
{
  require_same_shape(a, b, "add");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) += b(i, j);
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b)
{
  require_same_shape(a, b, "sub");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) -= b(i, j);
  return c;
}

Matrix neg(const Matrix& a)
{
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) = -a(i, j);
  return c;
}

Matrix scale(const Matrix& a, const Scalar& s)
{
  Matrix c(a.rows(), a.cols(), join(a.field(), s.field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) = a(i, j) * s;
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& a, unsigned k)
{
  if (!a.square()) throw ShapeError("power: non-square");
  Matrix r = Matrix::identity(a.rows(), a.field());
  for (unsigned s = 0; s < k; ++s) r = r * a;
  return r;
}

Matrix transpose(const Matrix& a)
{
  Matrix t(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.raw(j, i) = a(i, j);
  return t;
}

Matrix conj(const Matrix& a)
{
  Matrix t(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.raw(i, j) = a(i, j).conj();
  return t;
}

Matrix conj_transpose(const Matrix& a)
{
  Matrix t(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.raw(j, i) = a(i, j).conj();
  return t;
}

Matrix embed_C_in_R(const Matrix& a)
{
  if (is_quaternionic(a.field())) throw FieldMismatch("embed_C_in_R: quaternionic input");
  std::size_t m = a.rows(), n = a.cols();
  Matrix r(2 * m, 2 * n, real_image(a.field()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& z = a(i, j);
      if (z.is_zero()) continue;
      Scalar re, im;
      re.set(Scalar::kOne, z[Scalar::kOne]);
      re.set(Scalar::kR, z[Scalar::kR]);
      im.set(Scalar::kOne, z[Scalar::kI]);
      im.set(Scalar::kR, z[Scalar::kIR]);
      r.raw(i, j) = re;
      r.raw(m + i, n + j) = re;
      r.raw(m + i, j) = im;
      r.raw(i, n + j) = -im;
    }
  return r;
}

Matrix embed_H_in_C(const Matrix& a)
{
  std::size_t m = a.rows(), n = a.cols();
  Matrix c(2 * m, 2 * n, complex_image(a.field()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& q = a(i, j);
      if (q.is_zero()) continue;
      // q = P + jQ with P = x1 + i x2 and Q = x3 - i x4
      Scalar p, qq;
      p.set(Scalar::kOne, q[Scalar::kOne]);
      p.set(Scalar::kR, q[Scalar::kR]);
      p.set(Scalar::kI, q[Scalar::kI]);
      p.set(Scalar::kIR, q[Scalar::kIR]);
      qq.set(Scalar::kOne, q[Scalar::kJ]);
      qq.set(Scalar::kR, q[Scalar::kJR]);
      qq.set(Scalar::kI, -q[Scalar::kK]);
      qq.set(Scalar::kIR, -q[Scalar::kKR]);
      c.raw(i, j) = p;
      c.raw(i, n + j) = -qq.conj();
      c.raw(m + i, j) = qq;
      c.raw(m + i, n + j) = p.conj();
    }
  return c;
}

Matrix realify(const Matrix& a)
{
  if (is_quaternionic(a.field())) return embed_C_in_R(embed_H_in_C(a));
  if (is_complex_like(a.field())) return embed_C_in_R(a);
  return a;
}

Matrix block_oplus(const std::vector<Matrix>& blocks)
{
  std::size_t n = 0;
  Field f = Field::Rational;
  for (const auto& b : blocks) {
    if (!b.square()) throw ShapeError("block_oplus: non-square block");
    n += b.rows();
    f = join(f, b.field());
  }
  Matrix m(n, n, f);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.raw(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Matrix repeat_blocks(const Matrix& b, std::size_t s)
{
  if (!b.square()) throw ShapeError("repeat_blocks: non-square block");
  if (s == 0) return Matrix(0, 0, b.field());
  return block_oplus(std::vector<Matrix>(s, b));
}

Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc)
{
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw ShapeError("submatrix out of range");
  Matrix m(nr, nc, a.field());
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.raw(i, j) = a(r0 + i, c0 + j);
  return m;
}

void place(Matrix& a, const Matrix& b, std::size_t r0, std::size_t c0)
{
  if (r0 + b.rows() > a.rows() || c0 + b.cols() > a.cols()) throw ShapeError("place out of range");
  if (!contains(a.field(), b.field())) throw FieldMismatch("place: block field too large");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a.raw(r0 + i, c0 + j) = b(i, j);
}

Scalar trace(const Matrix& a)
{
  if (!a.square()) throw ShapeError("trace: non-square");
  Scalar s;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

Scalar det(const Matrix& a)
{
  if (!a.square()) throw ShapeError("det: non-square");
  if (is_quaternionic(a.field())) throw FieldMismatch("det: use reduced_norm for quaternions");
  Matrix m = a;
  std::size_t n = m.rows();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m.raw(p, j), m.raw(c, j));
      d = -d;
    }
    Scalar piv = m(c, c);
    d *= piv;
    Scalar inv = piv.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m.raw(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& a)
{
  if (!a.square()) throw ShapeError("inverse: non-square");
  std::size_t n = a.rows();
  Matrix m = a, r = Matrix::identity(n, a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.raw(p, j), m.raw(c, j));
        std::swap(r.raw(p, j), r.raw(c, j));
      }
    // row ops multiply from the left so quaternion order is respected
    Scalar inv = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(c, j).is_zero()) m.raw(c, j) = inv * m(c, j);
      if (!r(c, j).is_zero()) r.raw(c, j) = inv * r(c, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(c, j).is_zero()) m.raw(i, j) -= f * m(c, j);
        if (!r(c, j).is_zero()) r.raw(i, j) -= f * r(c, j);
      }
    }
  }
  return r;
}

Scalar reduced_trace(const Matrix& a)
{
  return trace(a).real_part() * Scalar(2);
}

Scalar reduced_norm(const Matrix& a)
{
  if (!a.square()) throw ShapeError("reduced_norm: non-square");
  return det(embed_H_in_C(a));
}

}  // namespace nilorb
