#pragma once

#include <cstddef>

#include "atomfact/poly_matrix.hpp"

namespace atomfact {

/// M (+) I_padding == P * L * Q with P upper and Q lower unitriangular.
struct HigmanOutcome {
  PolyMatrix P;
  Pencil L;
  PolyMatrix Q;
  std::size_t original_dim = 0;
  std::size_t padding = 0;
};

/// Entry split a + b*c.
struct EntrySplit {
  UPoly a;
  UPoly b;
  UPoly c;
};

struct HigmanStep {
  PolyMatrix M;
  PolyMatrix P;
  PolyMatrix Q;
};

/// One gadget step on entry (i, j). The result satisfies
/// P * M' * Q == M (+) I_1. Throws DomainError if the split does not
/// reproduce the entry.
HigmanStep higman_step(const PolyMatrix& m, std::size_t i, std::size_t j, const EntrySplit& split);

/// Linearizes a square matrix by peeling one power of x per step, entries in
/// row-major order. padding == sum over entries of max(deg - 1, 0).
HigmanOutcome linearize(const PolyMatrix& m);

}  // namespace atomfact
