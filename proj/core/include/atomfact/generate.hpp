#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "atomfact/poly_matrix.hpp"

namespace atomfact {

struct GenLimits {
  std::size_t max_dim = 5;
  int max_deg = 4;
  std::uint64_t max_coeff_bits = 8;
  std::size_t min_atoms = 1;
  std::size_t max_atoms = 4;
};

/// M == U_0 A_1 U_1 ... A_r U_r; ground_truth holds the atoms
/// (U_0 A_1), (U_1 A_2), ..., (U_{r-1} A_r U_r).
struct GeneratedInstance {
  std::uint64_t seed = 0;
  PolyMatrix M;
  std::vector<PolyMatrix> ground_truth;
  /// det of each ground-truth atom, in order.
  std::vector<UPoly> atom_dets;
};

/// Deterministic per (seed, limits). Every entry of M has degree <= max_deg
/// and every coefficient numerator and denominator fits in max_coeff_bits.
/// Throws DomainError for limits that admit no instance.
GeneratedInstance generate(std::uint64_t seed, const GenLimits& limits = {});

/// Largest bit size of a coefficient of any entry.
std::uint64_t max_coefficient_bits(const PolyMatrix& m);

}  // namespace atomfact
