#include <gtest/gtest.h>

#include <random>

#include "nilorb/matrix.hpp"

using namespace nilorb;

namespace {

Rational rnd(std::mt19937_64& g)
{
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Rational r(num(g), den(g));
  r.canonicalize();
  return r;
}

Scalar rnd_scalar(std::mt19937_64& g, Field f)
{
  Scalar s;
  static const std::vector<std::pair<Field, std::vector<int>>> comps = {
      {Field::Rational, {0}},          {Field::RealSqrt2, {0, 4}},  {Field::Gauss, {0, 1}},
      {Field::Tower, {0, 1, 4, 5}},    {Field::Quat, {0, 1, 2, 3}}, {Field::QuatSqrt2, {0, 1, 2, 3, 4, 5, 6, 7}}};
  for (const auto& [ff, idx] : comps)
    if (ff == f)
      for (int k : idx) s.set(k, rnd(g));
  return s;
}

Matrix rnd_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, Field f)
{
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rnd_scalar(g, f));
  return m;
}

const Field kAllFields[] = {Field::Rational, Field::RealSqrt2, Field::Gauss,
                            Field::Tower,    Field::Quat,      Field::QuatSqrt2};

}  // namespace

TEST(Scalar, UnitTable)
{
  Scalar i = Scalar::i(), j = Scalar::j(), k = Scalar::k(), r = Scalar::sqrt2();
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ(j * j, Scalar(-1));
  EXPECT_EQ(k * k, Scalar(-1));
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(r * i, i * r);
  EXPECT_EQ(r * j, j * r);
}

TEST(Scalar, MultiplicationIsAssociative)
{
  std::mt19937_64 g(1);
  for (int n = 0; n < 200; ++n) {
    Scalar a = rnd_scalar(g, Field::QuatSqrt2), b = rnd_scalar(g, Field::QuatSqrt2),
           c = rnd_scalar(g, Field::QuatSqrt2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Scalar, ConjugationAndInverse)
{
  std::mt19937_64 g(2);
  EXPECT_EQ(Scalar::sqrt2().conj(), Scalar::sqrt2());
  EXPECT_EQ(Scalar(Rational(3, 7)).conj(), Scalar(Rational(3, 7)));
  EXPECT_EQ(Scalar::i().conj(), -Scalar::i());
  EXPECT_EQ(Scalar::k().conj(), -Scalar::k());
  for (int n = 0; n < 100; ++n) {
    Scalar a = rnd_scalar(g, Field::QuatSqrt2), b = rnd_scalar(g, Field::QuatSqrt2);
    ASSERT_EQ((a * b).conj(), b.conj() * a.conj());
    ASSERT_EQ(a * a.conj(), a.norm());
    ASSERT_TRUE(a.norm().is_real());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Scalar(1));
      ASSERT_EQ(a.inverse() * a, Scalar(1));
    }
  }
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST(Scalar, FieldsNest)
{
  EXPECT_EQ(Scalar(3).field(), Field::Rational);
  EXPECT_EQ(Scalar::sqrt2().field(), Field::RealSqrt2);
  EXPECT_EQ(Scalar::i().field(), Field::Gauss);
  EXPECT_EQ((Scalar::i() * Scalar::sqrt2()).field(), Field::Tower);
  EXPECT_EQ(Scalar::j().field(), Field::Quat);
  EXPECT_EQ((Scalar::j() * Scalar::sqrt2()).field(), Field::QuatSqrt2);
  EXPECT_EQ(join(Field::Gauss, Field::RealSqrt2), Field::Tower);
  EXPECT_EQ(join(Field::Quat, Field::RealSqrt2), Field::QuatSqrt2);
  EXPECT_TRUE(contains(Field::QuatSqrt2, Field::Tower));
  EXPECT_FALSE(contains(Field::Quat, Field::RealSqrt2));
  for (Field f : kAllFields) EXPECT_EQ(field_from_name(field_name(f)), f);
}

TEST(Scalar, RationalText)
{
  EXPECT_EQ(rational_to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_to_string(Rational(5)), "5/1");
  EXPECT_EQ(rational_from_string("-6/4"), Rational(-3, 2));
  EXPECT_EQ(rational_from_string("7"), Rational(7));
  EXPECT_THROW(rational_from_string("1/0"), std::invalid_argument);
  EXPECT_THROW(rational_from_string("x"), std::invalid_argument);
}

TEST(Matrix, IdentityActsTrivially)
{
  std::mt19937_64 g(3);
  for (Field f : kAllFields) {
    Matrix a = rnd_matrix(g, 2, 2, f);
    EXPECT_EQ(Matrix::identity(2, f) * a, a);
    EXPECT_EQ(a * Matrix::identity(2, f), a);
  }
}

TEST(Matrix, QuaternionProductOrder)
{
  Matrix J = Matrix::from_rows({{Scalar::j()}}), I = Matrix::from_rows({{Scalar::i()}}, Field::Quat);
  EXPECT_EQ(J * I, Matrix::from_rows({{-Scalar::k()}}));
  EXPECT_EQ(embed_H_in_C(J) * embed_H_in_C(I), embed_H_in_C(Matrix::from_rows({{-Scalar::k()}})));
}

TEST(Matrix, ConjTranspose)
{
  std::mt19937_64 g(4);
  EXPECT_EQ(conj_transpose(Matrix::from_rows({{Scalar::i()}})), Matrix::from_rows({{-Scalar::i()}}));
  Matrix s = Matrix::from_ints({{1, 2}, {2, 5}});
  EXPECT_EQ(conj_transpose(s), s);
  for (Field f : kAllFields) {
    Matrix a = rnd_matrix(g, 3, 2, f), b = rnd_matrix(g, 2, 3, f);
    EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
    EXPECT_EQ(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a));
  }
}

TEST(Matrix, Embeddings)
{
  Matrix J = Matrix::from_rows({{Scalar::j()}});
  EXPECT_EQ(embed_H_in_C(J), Matrix::from_ints({{0, -1}, {1, 0}}));
  EXPECT_EQ(embed_C_in_R(Matrix::identity(1)), Matrix::identity(2));
  EXPECT_EQ(embed_C_in_R(Matrix::from_rows({{Scalar::i()}})), Matrix::from_ints({{0, -1}, {1, 0}}));

  std::mt19937_64 g(5);
  for (int n = 0; n < 20; ++n) {
    Scalar q = rnd_scalar(g, Field::Quat);
    EXPECT_EQ(det(embed_H_in_C(Matrix::from_rows({{q}}))), q * q.conj());
  }
  for (Field f : kAllFields) {
    Matrix a = rnd_matrix(g, 2, 3, f), b = rnd_matrix(g, 3, 2, f);
    Matrix ra = realify(a), rb = realify(b);
    EXPECT_EQ(realify(a * b), ra * rb) << field_name(f);
    EXPECT_TRUE(contains(Field::RealSqrt2, ra.field()));
    EXPECT_EQ(ra.rows(), 2 * static_cast<std::size_t>(real_rank(f)));
  }
}

TEST(Matrix, Blocks)
{
  EXPECT_EQ(repeat_blocks(Matrix::from_ints({{2}}), 3), Matrix::from_ints({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(block_oplus({Matrix::identity(1), Matrix::from_ints({{0, 1}, {-1, 0}})}),
            Matrix::from_ints({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  std::mt19937_64 g(6);
  for (Field f : {Field::Rational, Field::Gauss, Field::Tower}) {
    Matrix b = rnd_matrix(g, 2, 2, f);
    Scalar d = det(b);
    EXPECT_EQ(det(repeat_blocks(b, 3)), d * d * d);
  }
  Matrix a = Matrix::from_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(submatrix(a, 1, 1, 2, 2), Matrix::from_ints({{5, 6}, {8, 9}}));
  Matrix z(3, 3);
  place(z, Matrix::from_ints({{1, 1}}), 2, 1);
  EXPECT_EQ(z, Matrix::from_ints({{0, 0, 0}, {0, 0, 0}, {0, 1, 1}}));
}

TEST(Matrix, DeterminantAndInverse)
{
  EXPECT_EQ(det(Matrix(0, 0)), Scalar(1));
  EXPECT_EQ(det(Matrix::from_ints({{0, 1}, {1, 0}})), Scalar(-1));
  std::mt19937_64 g(7);
  for (Field f : kAllFields) {
    Matrix a = rnd_matrix(g, 3, 3, f);
    Matrix ai = inverse(a);
    EXPECT_EQ(a * ai, Matrix::identity(3, f)) << field_name(f);
    EXPECT_EQ(ai * a, Matrix::identity(3, f)) << field_name(f);
    if (!is_quaternionic(f)) {
      Matrix b = rnd_matrix(g, 3, 3, f);
      EXPECT_EQ(det(a * b), det(a) * det(b));
    }
  }
  EXPECT_THROW(inverse(Matrix::from_ints({{1, 2}, {2, 4}})), std::domain_error);
}

TEST(Matrix, ReducedTraceAndNorm)
{
  EXPECT_EQ(reduced_trace(Matrix::from_rows({{Scalar::i()}})), Scalar(0));
  EXPECT_EQ(reduced_norm(Matrix::from_rows({{Scalar::j()}})), Scalar(1));
  EXPECT_EQ(reduced_trace(Matrix::identity(2, Field::Quat)), Scalar(4));
  std::mt19937_64 g(8);
  for (int n = 0; n < 10; ++n) {
    Matrix a = rnd_matrix(g, 2, 2, Field::Quat), b = rnd_matrix(g, 2, 2, Field::Quat);
    EXPECT_EQ(reduced_norm(a * b), reduced_norm(a) * reduced_norm(b));
    EXPECT_EQ(reduced_trace(a * b), reduced_trace(b * a));
  }
}

TEST(Matrix, FieldDiscipline)
{
  Matrix a(1, 1, Field::Rational);
  EXPECT_THROW(a.set(0, 0, Scalar::i()), FieldMismatch);
  EXPECT_THROW(promote(Matrix::from_rows({{Scalar::i()}}), Field::RealSqrt2), FieldMismatch);
  EXPECT_EQ(tighten(Matrix::identity(2, Field::QuatSqrt2)).field(), Field::Rational);
  EXPECT_THROW(Matrix::identity(2) * Matrix::identity(3), ShapeError);
}
