#include "atomfact/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "atomfact/error.hpp"
#include "atomfact/unifactor.hpp"

namespace atomfact {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random irreducible integer polynomial of degree k with small coefficients.
UPoly random_irreducible(Rng& rng, int k, bool monic) {
  for (;;) {
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = Rat(uniform(rng, -4, 4));
    c[static_cast<std::size_t>(k)] = monic ? Rat(1) : Rat(uniform(rng, 1, 3));
    UPoly f(std::move(c));
    if (is_irreducible(f)) return f;
  }
}

// Atom of total det degree k inside an n x n identity.
PolyMatrix random_atom(Rng& rng, std::size_t n, int k) {
  PolyMatrix a = PolyMatrix::identity(n);
  if (static_cast<std::size_t>(k) <= n && chance(rng, 0.6)) {
    const UPoly f = random_irreducible(rng, k, true);
    const RatMatrix cf = companion(f);
    const std::size_t off = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        UPoly e(cf(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        if (i == j) e -= UPoly::x();
        a(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(j)) = e;
      }
  } else {
    const std::size_t pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    a(pos, pos) = random_irreducible(rng, k, false);
  }
  return a;
}

// Sparse unit: permutation times lower and upper unitriangular factors.
PolyMatrix random_unit(Rng& rng, std::size_t n) {
  const double p = n > 1 ? 1.0 / static_cast<double>(n) : 0.0;
  auto entry = [&]() {
    long c = uniform(rng, -2, 2);
    if (c == 0) c = 1;
    return chance(rng, 0.15) ? UPoly::monomial(Rat(c), 1) : UPoly(Rat(c));
  };
  PolyMatrix lo = PolyMatrix::identity(n);
  PolyMatrix up = PolyMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (chance(rng, p)) lo(i, j) = entry();
      if (chance(rng, p)) up(j, i) = entry();
    }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return permutation_matrix(order) * lo * up;
}

}  // namespace

std::uint64_t max_coefficient_bits(const PolyMatrix& m) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& c : m(i, j).coeffs()) b = std::max(b, encoding_size(c));
  return b;
}

GeneratedInstance generate(std::uint64_t seed, const GenLimits& limits) {
  if (limits.max_dim == 0 || limits.max_deg < 1 || limits.max_coeff_bits < 3 || limits.min_atoms == 0 ||
      limits.min_atoms > limits.max_atoms)
    throw DomainError("generate: limits admit no instance");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(limits.max_dim)));
    const std::size_t r =
        static_cast<std::size_t>(uniform(rng, static_cast<long>(limits.min_atoms), static_cast<long>(limits.max_atoms)));
    const long budget = static_cast<long>(n) * limits.max_deg;
    if (static_cast<long>(r) > budget) continue;

    std::vector<PolyMatrix> atoms;
    long used = 0;
    for (std::size_t t = 0; t < r; ++t) {
      const long room = std::min<long>({4, budget - used - static_cast<long>(r - t - 1), static_cast<long>(n) * 2});
      const int k = static_cast<int>(uniform(rng, 1, std::max<long>(1, std::min<long>(room, 3))));
      atoms.push_back(random_atom(rng, n, k));
      used += k;
    }

    std::vector<PolyMatrix> units;
    for (std::size_t t = 0; t <= r; ++t) units.push_back(random_unit(rng, n));

    GeneratedInstance g;
    g.seed = seed;
    g.M = units[0];
    for (std::size_t t = 0; t < r; ++t) {
      PolyMatrix truth = units[t] * atoms[t];
      if (t + 1 == r) truth = truth * units[r];
      g.ground_truth.push_back(truth);
      g.M = g.M * atoms[t] * units[t + 1];
    }
    if (g.M.max_degree() > limits.max_deg || max_coefficient_bits(g.M) > limits.max_coeff_bits) continue;
    for (const auto& a : g.ground_truth) g.atom_dets.push_back(det(a));
    return g;
  }
  throw DomainError("generate: no instance within limits after many attempts");
}

}  // namespace atomfact
