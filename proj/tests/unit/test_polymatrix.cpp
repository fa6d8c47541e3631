#include <gtest/gtest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "atomfact/error.hpp"
#include "atomfact/unifactor.hpp"
#include "helpers.hpp"

using namespace atomfact;
using testutil::pmat;
using testutil::poly;

namespace {
const UPoly X = UPoly::x();
}

TEST(Det, Examples) {
  EXPECT_EQ(det(pmat({{X, 1}, {0, X}})), poly({0, 0, 1}));
  EXPECT_EQ(det(pmat({{X, 1}, {1, X}})), poly({-1, 0, 1}));
  EXPECT_EQ(det(PolyMatrix::identity(3)), UPoly(1));
  EXPECT_EQ(det(PolyMatrix(0, 0)), UPoly(1));
  EXPECT_TRUE(det(pmat({{X, 0}, {0, 0}})).is_zero());
  EXPECT_THROW(det(PolyMatrix(2, 3)), DimensionError);
}

TEST(UnitAndFull, Examples) {
  EXPECT_TRUE(is_unit(pmat({{1, X}, {0, 1}})));
  EXPECT_FALSE(is_full(pmat({{X, 0}, {0, 0}})));
  const PolyMatrix m = pmat({{X, 1}, {1, X}});
  EXPECT_TRUE(is_full(m));
  EXPECT_FALSE(is_unit(m));
}

TEST(InvertUnit, Examples) {
  EXPECT_EQ(invert_unit(pmat({{1, X}, {0, 1}})), pmat({{1, -X}, {0, 1}}));
  PolyMatrix d = PolyMatrix::diagonal({UPoly(2), UPoly(Rat(1, 3))});
  EXPECT_EQ(invert_unit(d), PolyMatrix::diagonal({UPoly(Rat(1, 2)), UPoly(3)}));
  EXPECT_EQ(invert_unit(pmat({{1, 0}, {X * X, 1}})), pmat({{1, 0}, {-(X * X), 1}}));
  EXPECT_THROW(invert_unit(pmat({{X, 0}, {0, 1}})), DomainError);
}

TEST(RankFractionField, Examples) {
  EXPECT_EQ(rank_fraction_field(pmat({{X, X}})), 1u);
  EXPECT_EQ(rank_fraction_field(PolyMatrix(3, 2)), 0u);
  EXPECT_EQ(rank_fraction_field(pmat({{X, 1}, {X * X, X}})), 1u);
}

TEST(ElementaryOps, Examples) {
  PolyMatrix m = pmat({{1, X}, {0, 1}});
  m.add_scaled_column(0, 1, -X);
  EXPECT_TRUE(m.is_identity());

  PolyMatrix s = PolyMatrix::identity(3);
  s.swap_columns(0, 2);
  EXPECT_EQ(det(s), UPoly(-1));

  EXPECT_EQ(block_embed(pmat({{X}}), 1, 3), PolyMatrix::diagonal({UPoly(1), X, UPoly(1)}));
  EXPECT_THROW(block_embed(pmat({{X}}), 3, 3), DimensionError);

  const PolyMatrix pi = permutation_matrix({2, 0, 1});
  const PolyMatrix a = pmat({{1, 2, 3}});
  EXPECT_EQ(a * pi, pmat({{3, 1, 2}}));
}

TEST(IsAtom, Examples) {
  EXPECT_TRUE(is_atom(pmat({{X, 0}, {0, 1}})));
  EXPECT_FALSE(is_atom(pmat({{X * X, 0}, {0, 1}})));
  EXPECT_FALSE(is_atom(PolyMatrix::identity(2)));
  EXPECT_THROW(is_atom(pmat({{X, 0}, {0, 0}})), DomainError);
}

TEST(Pencil, Conversion) {
  const PolyMatrix m = pmat({{X + UPoly(2), 1}, {UPoly(3) * X, 0}});
  const Pencil p = Pencil::from_poly(m);
  EXPECT_EQ(p.to_poly(), m);
  EXPECT_FALSE(p.is_monic());
  EXPECT_THROW(Pencil::from_poly(pmat({{X * X}})), DomainError);
  EXPECT_THROW(Pencil::from_poly(pmat({{X, 1}})), DimensionError);
}

TEST(EncodingSize, Matrix) {
  // 2x2, largest entry 1 + 2x + 3x^2 of size 4.
  EXPECT_EQ(encoding_size(pmat({{poly({1, 2, 3}), 1}, {X, 0}})), 16u);
}

TEST(PolyMatrixProperty, DetMatchesCofactorExpansion) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(testutil::uniform(rng, 1, 4));
    const PolyMatrix m = testutil::random_matrix(rng, n, n, 3, 9);
    ASSERT_EQ(det(m), oracle::cofactor_det(m));
  }
}

TEST(PolyMatrixProperty, DetIsMultiplicative) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testutil::uniform(rng, 1, 4));
    const PolyMatrix a = testutil::random_matrix(rng, n, n, 2, 5);
    const PolyMatrix b = testutil::random_matrix(rng, n, n, 2, 5);
    ASSERT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(PolyMatrixProperty, RankMatchesSymbolicElimination) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = static_cast<std::size_t>(testutil::uniform(rng, 1, 4));
    const std::size_t c = static_cast<std::size_t>(testutil::uniform(rng, 1, 4));
    const std::size_t k = static_cast<std::size_t>(testutil::uniform(rng, 1, 3));
    // Product of random r x k and k x c factors caps the rank at k.
    const PolyMatrix m = testutil::random_matrix(rng, r, k, 2, 3) * testutil::random_matrix(rng, k, c, 2, 3);
    ASSERT_EQ(rank_fraction_field(m), oracle::symbolic_rank(m));
  }
}

TEST(PolyMatrixProperty, InvertUnitRoundTrip) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testutil::uniform(rng, 1, 4));
    const PolyMatrix u = testutil::random_unit(rng, n, 6, 2);
    const PolyMatrix v = invert_unit(u);
    ASSERT_TRUE((u * v).is_identity());
    ASSERT_TRUE((v * u).is_identity());
  }
}

TEST(PolyMatrixProperty, TransformsStayUnimodular) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(testutil::uniform(rng, 2, 4));
    ColumnTransform ct(n);
    RowTransform rt(n);
    for (int k = 0; k < 8; ++k) {
      const std::size_t i = static_cast<std::size_t>(testutil::uniform(rng, 0, static_cast<long>(n) - 1));
      const std::size_t j = (i + 1) % n;
      const UPoly g = testutil::random_poly(rng, 2, 3);
      switch (testutil::uniform(rng, 0, 2)) {
        case 0:
          ct.add(i, j, g);
          rt.add(j, i, g);
          break;
        case 1:
          ct.swap(i, j);
          rt.swap(i, j);
          break;
        default:
          ct.scale(i, Rat(testutil::uniform(rng, 1, 5)));
          rt.scale(j, Rat(-testutil::uniform(rng, 1, 5)));
      }
    }
    ASSERT_TRUE((ct.forward() * ct.inverse()).is_identity());
    ASSERT_TRUE((rt.forward() * rt.inverse()).is_identity());
    ASSERT_EQ(det(ct.forward()).degree(), 0);
    ASSERT_EQ(det(rt.forward()).degree(), 0);
  }
}

// An atom has no proper left divisor; a matrix with reducible det has one.
// Search all 2x2 left factors with entries from a small set.
TEST(PolyMatrixProperty, AtomCertificateMatchesBruteForce) {
  const std::vector<UPoly> pool{UPoly(), UPoly(1), UPoly(-1), X, X + UPoly(1), X - UPoly(1), -X};
  std::vector<PolyMatrix> divisors;
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        for (const auto& d : pool) {
          PolyMatrix l = pmat({{a, b}, {c, d}});
          if (det(l).degree() >= 1) divisors.push_back(std::move(l));
        }
  auto has_proper_left_divisor = [&](const PolyMatrix& m) {
    const int dm = det(m).degree();
    for (const auto& l : divisors) {
      const UPoly dl = det(l);
      if (dl.degree() >= dm) continue;
      // l^-1 m is polynomial iff adj(l) m is divisible by det(l) entrywise.
      const PolyMatrix adj = pmat({{l(1, 1), -l(0, 1)}, {-l(1, 0), l(0, 0)}});
      const PolyMatrix q = adj * m;
      bool ok = true;
      for (std::size_t i = 0; i < 2 && ok; ++i)
        for (std::size_t j = 0; j < 2 && ok; ++j) ok = divmod(q(i, j), dl).remainder.is_zero();
      if (ok) return true;
    }
    return false;
  };
  std::mt19937_64 rng(36);
  int atoms = 0, splits = 0;
  for (int t = 0; t < 60; ++t) {
    const PolyMatrix m = testutil::random_matrix(rng, 2, 2, 1, 2);
    const UPoly d = det(m);
    if (d.degree() < 1) continue;
    if (is_atom(m)) {
      ++atoms;
      ASSERT_FALSE(has_proper_left_divisor(m));
    } else if (has_proper_left_divisor(m)) {
      ++splits;
    }
  }
  EXPECT_GT(atoms, 0);
  EXPECT_GT(splits, 0);
}
