#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "atomfact/poly_matrix.hpp"

namespace testutil {

using namespace atomfact;

inline UPoly poly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long a : c) v.emplace_back(a);
  return UPoly(std::move(v));
}

inline PolyMatrix pmat(const std::vector<std::vector<UPoly>>& rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline RatMatrix rmat(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rat(rows[i][j]);
  return m;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline UPoly random_poly(std::mt19937_64& rng, int maxdeg, long bound) {
  const int deg = static_cast<int>(uniform(rng, -1, maxdeg));
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(rng, -bound, bound));
  return UPoly(std::move(c));
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int maxdeg, long bound) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(rng, maxdeg, bound);
  return m;
}

inline RatMatrix random_scalar(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(uniform(rng, -bound, bound));
  return m;
}

inline PolyMatrix product(const std::vector<PolyMatrix>& ms) {
  PolyMatrix p = ms.at(0);
  for (std::size_t i = 1; i < ms.size(); ++i) p = p * ms[i];
  return p;
}

/// Unimodular matrix from random elementary operations.
inline PolyMatrix random_unit(std::mt19937_64& rng, std::size_t n, int ops, int maxdeg) {
  PolyMatrix u = PolyMatrix::identity(n);
  if (n < 2) return u;
  for (int k = 0; k < ops; ++k) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_scaled_column(i, j, random_poly(rng, maxdeg, 2));
  }
  return u;
}

}  // namespace testutil
