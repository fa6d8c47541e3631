#include <gtest/gtest.h>

#include "atomfact/error.hpp"
#include "atomfact/generate.hpp"
#include "atomfact/unifactor.hpp"
#include "helpers.hpp"

using namespace atomfact;

TEST(Generate, Deterministic) {
  const GeneratedInstance a = generate(17);
  const GeneratedInstance b = generate(17);
  EXPECT_EQ(a.M, b.M);
  EXPECT_EQ(a.ground_truth, b.ground_truth);
  EXPECT_NE(generate(18).M, a.M);
}

TEST(Generate, RespectsLimits) {
  const GenLimits lim{4, 3, 6, 2, 3};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GeneratedInstance g = generate(seed, lim);
    ASSERT_TRUE(g.M.is_square());
    ASSERT_LE(g.M.rows(), lim.max_dim);
    ASSERT_LE(g.M.max_degree(), lim.max_deg);
    ASSERT_LE(max_coefficient_bits(g.M), lim.max_coeff_bits);
    ASSERT_GE(g.ground_truth.size(), lim.min_atoms);
    ASSERT_LE(g.ground_truth.size(), lim.max_atoms);
    ASSERT_EQ(testutil::product(g.ground_truth), g.M);
    for (std::size_t t = 0; t < g.ground_truth.size(); ++t) {
      ASSERT_EQ(det(g.ground_truth[t]), g.atom_dets[t]);
      ASSERT_TRUE(is_irreducible(g.atom_dets[t]));
    }
    ASSERT_EQ(factor_rational(det(g.M)).omega(), g.ground_truth.size());
  }
}

TEST(Generate, ImpossibleLimits) {
  EXPECT_THROW(generate(1, GenLimits{0, 4, 8, 1, 4}), DomainError);
  EXPECT_THROW(generate(1, GenLimits{3, 0, 8, 1, 4}), DomainError);
}
