#include <gtest/gtest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "atomfact/error.hpp"
#include "helpers.hpp"

using namespace atomfact;
using testutil::poly;

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(Rat::parse("6/4"), Rat(3, 2));
  EXPECT_EQ(Rat::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rat::parse("4/2").str(), "2");
  EXPECT_EQ(Rat::parse("0/7"), Rat(0));
  EXPECT_EQ(Rat::parse("3/-6"), Rat(-1, 2));
  EXPECT_THROW(Rat::parse("1/0"), ParseError);
  EXPECT_THROW(Rat::parse("abc"), ParseError);
  EXPECT_THROW(Rat::parse(""), ParseError);
  EXPECT_THROW(Rat(1) / Rat(0), DomainError);
}

TEST(Rational, EncodingSize) {
  EXPECT_EQ(encoding_size(Rat(3, 2)), 2u);
  EXPECT_EQ(encoding_size(Rat(0)), 0u);
  EXPECT_EQ(encoding_size(Rat(-8)), 4u);
  EXPECT_EQ(encoding_size(Rat(1, 255)), 8u);
  EXPECT_EQ(encoding_size(poly({1, 2, 3})), 4u);
  EXPECT_EQ(encoding_size(poly({5})), 0u);
  EXPECT_EQ(encoding_size(UPoly()), 0u);
  EXPECT_EQ(encoding_size(poly({0, 0, 0, 1})), 3u);
}

TEST(Poly, Divmod) {
  auto a = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(a.quotient, poly({1, 1}));
  EXPECT_TRUE(a.remainder.is_zero());
  auto b = divmod(poly({0, 0, 1}), poly({0, 1}));
  EXPECT_EQ(b.quotient, poly({0, 1}));
  EXPECT_TRUE(b.remainder.is_zero());
  auto c = divmod(poly({1, 0, 1}), poly({1, 1}));
  EXPECT_EQ(c.quotient, poly({-1, 1}));
  EXPECT_EQ(c.remainder, poly({2}));
  EXPECT_THROW(divmod(poly({1}), UPoly()), DomainError);
}

TEST(Poly, Gcd) {
  EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({1, -2, 1})), poly({-1, 1}));
  EXPECT_EQ(gcd(poly({4, 2}), UPoly()), poly({2, 1}));
  EXPECT_EQ(gcd(poly({0, -1, 0, 1}), poly({0, 0, 1})), poly({0, 1}));
  EXPECT_THROW(gcd(UPoly(), UPoly()), DomainError);
}

TEST(Poly, EvalAndInterpolate) {
  EXPECT_EQ(poly({-1, 0, 1}).eval(Rat(2)), Rat(3));
  std::vector<std::pair<Rat, Rat>> line{{Rat(0), Rat(1)}, {Rat(1), Rat(2)}};
  EXPECT_EQ(interpolate(line), poly({1, 1}));
  std::vector<std::pair<Rat, Rat>> cube;
  for (long a = 0; a < 4; ++a) cube.emplace_back(Rat(a), Rat(a * a * a));
  const UPoly f = interpolate(cube);
  EXPECT_EQ(f, poly({0, 0, 0, 1}));
  EXPECT_EQ(f.eval(Rat(5)), Rat(125));
  std::vector<std::pair<Rat, Rat>> dup{{Rat(1), Rat(1)}, {Rat(1), Rat(2)}};
  EXPECT_THROW(interpolate(dup), DomainError);
}

TEST(Poly, MignotteBound) {
  EXPECT_GE(mignotte_bound(poly({-1, 1})), Int(2));
  EXPECT_GE(mignotte_bound(poly({5})), Int(5));
  // ceil(4 * sqrt(2)) = 6
  EXPECT_EQ(mignotte_bound(poly({-1, 0, 1})), Int(6));
}

TEST(Poly, ShiftAndDerivative) {
  EXPECT_EQ(poly({0, 0, 1}).shift(Rat(1)), poly({1, 2, 1}));
  EXPECT_EQ(poly({1, 2, 3}).derivative(), poly({2, 6}));
  EXPECT_EQ(poly({2, 4}).monic(), poly({0, 1}) + UPoly(Rat(1, 2)));
  EXPECT_EQ(poly({-1, 0, 1}).str(), "x^2 - 1");
}

TEST(PolyProperty, Distributivity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const UPoly f = testutil::random_poly(rng, 6, 30);
    const UPoly g = testutil::random_poly(rng, 6, 30);
    const UPoly h = testutil::random_poly(rng, 6, 30);
    ASSERT_EQ((f + g) * h, f * h + g * h);
    ASSERT_EQ(f * g, oracle::naive_mul(f, g));
  }
}

TEST(PolyProperty, DivmodRoundTrip) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    const UPoly f = testutil::random_poly(rng, 8, 50);
    UPoly g = testutil::random_poly(rng, 5, 50);
    if (g.is_zero()) g = UPoly(3);
    const DivMod qr = divmod(f, g);
    ASSERT_EQ(qr.quotient * g + qr.remainder, f);
    ASSERT_LT(qr.remainder.degree(), g.degree() == 0 ? 0 : g.degree());
  }
}

TEST(PolyProperty, RationalCanonicalEquality) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const long p = testutil::uniform(rng, -100, 100);
    const long q = testutil::uniform(rng, 1, 100);
    const long k = testutil::uniform(rng, 1, 20);
    ASSERT_EQ(Rat(p, q), Rat(p * k, q * k));
    ASSERT_EQ(Rat(p, q).str(), Rat(p * k, q * k).str());
  }
}
