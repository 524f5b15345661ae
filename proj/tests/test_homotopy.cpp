#include <gtest/gtest.h>

#include <random>

#include "nilorb/centralizer.hpp"
#include "nilorb/homotopy.hpp"

using namespace nilorb;

namespace {

AlgebraSpec A(Family f, int n) { return AlgebraSpec::make(f, n); }
AlgebraSpec Apq(Family f, int p, int q) { return AlgebraSpec::make_pq(f, p, q); }

std::vector<AlgebraSpec> embedding_algebras()
{
  std::vector<AlgebraSpec> out;
  for (Family f : {Family::sl_r, Family::sl_c, Family::sl_h, Family::sp_c})
    for (int n = 1; n <= 4; ++n) out.push_back(A(f, n));
  for (int n = 3; n <= 6; ++n) out.push_back(A(Family::so_c, n));
  for (int p = 1; p <= 4; ++p) out.push_back(Apq(Family::so_pq, p, 5 - p));
  for (int p = 1; p <= 3; ++p) out.push_back(Apq(Family::sp_pq, p, 4 - p));
  return out;
}

}  // namespace

TEST(Homotopy, MinimalOrbitOfSl2C)
{
  auto a = A(Family::sl_c, 2);
  HomotopyType h = compact_pair(a, parse_datum(a, "2"));
  EXPECT_EQ(h.ambient, "SU(2)");
  EXPECT_EQ(h.constraint, Constraint::Chi);
  EXPECT_EQ(h.dim_M, 3);
  EXPECT_EQ(h.dim_K, 0);
  EXPECT_EQ(h.dim_quotient, 3);
  EXPECT_EQ(h.render(), "SU(2) / (U(1))_{χ=1}");
}

TEST(Homotopy, RenderedExamples)
{
  auto sp = Apq(Family::sp_pq, 1, 1);
  EXPECT_EQ(compact_pair(sp, parse_datum(sp, "2")).render(), "(Sp(1) × Sp(1)) / (U(1))");
  auto so = A(Family::so_c, 5);
  EXPECT_EQ(compact_pair(so, parse_datum(so, "2,2,1")).render(), "SO(5) / (Sp(1) × S(O(1)))");
  auto h = A(Family::sl_h, 1);
  EXPECT_EQ(compact_pair(h, parse_datum(h, "1")).dim_quotient, 0);
  auto h3 = A(Family::sl_h, 3);
  EXPECT_EQ(compact_pair(h3, parse_datum(h3, "2,1")).render(), "Sp(3) / (Sp(1) × Sp(1))");
  auto pq = Apq(Family::so_pq, 2, 1);
  HomotopyType t = compact_pair(pq, parse_datum(pq, "3;3:0"));
  EXPECT_EQ(t.constraint, Constraint::ChiPQ);
  EXPECT_FALSE(t.auxiliary.empty());
}

TEST(Homotopy, ZeroOrbitIsPoint)
{
  for (auto a : {A(Family::sl_r, 3), A(Family::sl_c, 2), A(Family::so_c, 5), Apq(Family::so_pq, 2, 2),
                 A(Family::sp_c, 2), Apq(Family::sp_pq, 1, 2), A(Family::so_star, 3)}) {
    HomotopyType h = compact_pair(a, enumerate_orbits(a).front().datum);
    EXPECT_EQ(h.dim_quotient, 0) << a.name();
    EXPECT_EQ(h.dim_K, h.dim_M) << a.name();
  }
}

TEST(Homotopy, DimKMatchesCompactCentralizer)
{
  auto as = embedding_algebras();
  for (int n = 1; n <= 4; ++n) as.push_back(A(Family::so_star, n));
  for (const auto& a : as)
    for (const auto& r : enumerate_orbits(a)) {
      HomotopyType h = compact_pair(a, r.datum);
      EXPECT_EQ(h.dim_K, expected_compact_dim(a, r.datum)) << a.name() << " " << r.datum.to_string();
      EXPECT_EQ(h.dim_quotient, h.dim_M - h.dim_K);
      EXPECT_GE(h.dim_quotient, 0);
    }
}

TEST(Homotopy, EmbeddingOfSlBlocks)
{
  auto a = A(Family::sl_r, 3);
  auto d = parse_datum(a, "2,1");
  KElement e = identity_element(a, d);
  HomotopyType h = compact_pair(a, d);
  ASSERT_EQ(e.factors.size(), 2u);
  // factors follow increasing part size: [1] then [2]
  EXPECT_EQ(h.factors[0].part, 1);
  EXPECT_EQ(h.factors[1].part, 2);
  e.factors[0] = Matrix::from_ints({{5}});
  e.factors[1] = Matrix::from_ints({{7}});
  // lowest weight first: the [1] vector, then v and Xv of the [2] block
  EXPECT_EQ(embed_K(a, d, e), Matrix::from_ints({{5, 0, 0}, {0, 7, 0}, {0, 0, 7}}));
  std::vector<Scalar> c = chi(a, d, e);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], Scalar(5 * 7 * 7));
}

TEST(Homotopy, IdentityEmbedsAsIdentity)
{
  for (const auto& a : embedding_algebras())
    for (const auto& r : enumerate_orbits(a)) {
      KElement id = identity_element(a, r.datum);
      Matrix m = embed_K(a, r.datum, id);
      EXPECT_EQ(m, Matrix::identity(m.rows(), m.field()));
      for (const Scalar& s : chi(a, r.datum, id)) EXPECT_EQ(s, Scalar(1));
    }
}

TEST(Homotopy, EmbeddingIsHomomorphism)
{
  std::mt19937_64 g(31);
  for (const auto& a : embedding_algebras())
    for (const auto& r : enumerate_orbits(a))
      for (int k = 0; k < 5; ++k) {
        KElement x = random_factor_matrices(a, r.datum, g), y = random_factor_matrices(a, r.datum, g);
        EXPECT_EQ(embed_K(a, r.datum, x * y), embed_K(a, r.datum, x) * embed_K(a, r.datum, y))
            << a.name() << " " << r.datum.to_string();
      }
}

TEST(Homotopy, DeterminantIsCharacter)
{
  std::mt19937_64 g(32);
  for (Family f : {Family::sl_r, Family::sl_c})
    for (int n = 1; n <= 5; ++n) {
      auto a = A(f, n);
      for (const auto& r : enumerate_orbits(a))
        for (int k = 0; k < 5; ++k) {
          KElement x = random_factor_matrices(a, r.datum, g);
          EXPECT_EQ(det(embed_K(a, r.datum, x)), chi(a, r.datum, x)[0]);
        }
    }
}

TEST(Homotopy, SoPqBlockAccounting)
{
  std::mt19937_64 g(33);
  for (int n = 3; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      auto a = Apq(Family::so_pq, p, n - p);
      for (const auto& r : enumerate_orbits(a)) {
        KElement x = random_element(a, r.datum, g);
        auto [dp, dq] = embed_K_pq(a, r.datum, x);
        EXPECT_EQ(dp.rows(), static_cast<std::size_t>(p));
        EXPECT_EQ(dq.rows(), static_cast<std::size_t>(n - p));
        std::vector<Scalar> c = chi(a, r.datum, x);
        ASSERT_EQ(c.size(), 2u);
        EXPECT_EQ(det(dp), c[0]);
        EXPECT_EQ(det(dq), c[1]);
        EXPECT_EQ(det(dp) * det(dq), c[0] * c[1]);
      }
    }
}

TEST(Homotopy, RandomPointsAreUnitary)
{
  std::mt19937_64 g(34);
  for (FactorKind k : {FactorKind::O, FactorKind::U, FactorKind::Sp})
    for (int size = 0; size <= 4; ++size)
      for (int trial = 0; trial < 5; ++trial) {
        Matrix m = random_factor_point(k, size, g);
        EXPECT_EQ(conj_transpose(m) * m, Matrix::identity(size, m.field()));
      }
  Matrix skew = Matrix::from_ints({{0, 1}, {-1, 0}});
  Matrix c = cayley(skew);
  EXPECT_EQ(transpose(c) * c, Matrix::identity(2));
}

TEST(Homotopy, MembershipOfRandomElements)
{
  std::mt19937_64 g(35);
  for (const auto& a : embedding_algebras())
    for (const auto& r : enumerate_orbits(a)) {
      if (r.is_zero_orbit) continue;
      Triple t = build_triple(a, r.datum);
      Matrix T = has_adapted_basis(a.family) ? adapted_change_of_basis(a, r.datum) : Matrix();
      EXPECT_TRUE(verify_K_membership(a, r.datum, identity_element(a, r.datum), t, T).ok);
      MembershipResult m = verify_K_membership(a, r.datum, random_element(a, r.datum, g), t, T);
      EXPECT_TRUE(m.ok) << a.name() << " " << r.datum.to_string() << ": " << m.failure;
    }
}

TEST(Homotopy, SpCSignFlipOnEvenBlock)
{
  auto a = A(Family::sp_c, 1);
  auto d = parse_datum(a, "2");
  KElement e = identity_element(a, d);
  ASSERT_EQ(e.factors.size(), 1u);
  e.factors[0] = Matrix::from_ints({{-1}});
  Matrix m = embed_K_on_module(a, d, e);
  EXPECT_EQ(m, scale(Matrix::identity(m.rows(), m.field()), Scalar(-1)));
  Triple t = build_triple(a, d);
  EXPECT_TRUE(verify_K_membership(a, d, e, t, adapted_change_of_basis(a, d)).ok);
}

TEST(Homotopy, MembershipRejectsNonOrthogonal)
{
  auto a = A(Family::so_c, 3);
  auto d = parse_datum(a, "3");
  Triple t = build_triple(a, d);
  Matrix T = adapted_change_of_basis(a, d);
  KElement e = identity_element(a, d);
  ASSERT_EQ(e.factors.size(), 1u);
  e.factors[0] = Matrix::from_ints({{-1}});
  EXPECT_TRUE(verify_K_membership(a, d, e, t, T).ok);
  e.factors[0] = Matrix::from_ints({{2}});
  EXPECT_FALSE(verify_K_membership(a, d, e, t, T).ok);
}

TEST(Homotopy, SoStarHasNoEmbedding)
{
  auto a = A(Family::so_star, 2);
  auto d = enumerate_orbits(a).back().datum;
  EXPECT_FALSE(compact_pair(a, d).embedding_available);
  EXPECT_THROW(embed_K(a, d, identity_element(a, d)), Unsupported);
}

TEST(Homotopy, ShapeMismatchIsRejected)
{
  auto a = A(Family::sl_r, 3);
  auto d = parse_datum(a, "2,1");
  KElement e = identity_element(a, d);
  e.factors.pop_back();
  EXPECT_THROW(embed_K(a, d, e), ShapeError);
}
