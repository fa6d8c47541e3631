#pragma once

#include <cstddef>
#include <vector>

#include "atomfact/poly_matrix.hpp"

namespace atomfact {

enum class Side { left, right };

/// Right form S * L * U == W (+) I_padding; left form U * L * S == W (+) I_padding.
struct MonicOutcome {
  Side side = Side::right;
  PolyMatrix U;
  PolyMatrix U_inv;
  RatMatrix S;
  RatMatrix S_inv;
  Pencil W;
  std::size_t padding = 0;
};

/// Throws SingularInputError when L is not full and DomainError when L is
/// already monic.
MonicOutcome monic_reduce(const Pencil& l, Side side = Side::right);

/// L(x) == (A - (x - shift) I) * post with post == -A1.
struct ShiftOutcome {
  long shift = 0;
  RatMatrix A;
  RatMatrix post;
};

/// First i in 0..d with A0 + i*A1 invertible. Requires a monic pencil.
ShiftOutcome shift_to_invertible(const Pencil& l);

struct CharMinPoly {
  UPoly charpoly;  // det(xI - A)
  UPoly minpoly;
};

CharMinPoly char_min_poly(const RatMatrix& a);

/// One primary component: V = ker f(A)^e, dim V == d * deg f.
struct PrimaryComponent {
  UPoly f;  // monic irreducible
  unsigned d = 0;
  unsigned e = 0;
  std::vector<std::vector<Rat>> basis;
  RatMatrix block;  // A restricted to V in the given basis
};

/// Components in the factor order of the characteristic polynomial. The
/// concatenated bases block-diagonalize A.
std::vector<PrimaryComponent> primary_decompose(const RatMatrix& a);

/// Vectors added for layer j of the tower U_1 < ... < U_e, U_j = ker f(B)^j.
struct LayerBasis {
  unsigned layer = 0;
  std::vector<std::vector<std::vector<Rat>>> cyclic_sets;  // each {u, Bu, ..., B^(k-1) u}
  std::size_t nu = 0;
};

/// Layers in ascending order. Requires charpoly(B) = f^l, minpoly(B) = f^e.
std::vector<LayerBasis> good_basis(const RatMatrix& b, const UPoly& f, unsigned e);

/// Change of basis collecting the layers top-down: layer e first, each
/// cyclic set in order. T^-1 B T is block lower triangular with
/// companion(f) on the diagonal.
RatMatrix good_basis_matrix(const std::vector<LayerBasis>& layers, std::size_t dim);

/// Splits a block lower triangular linear matrix into one factor per
/// diagonal block: [[D,0],[E,Y]] = [[D,0],[E,I]] * (I (+) Y). Throws
/// InvariantViolation when X is not block lower triangular or a diagonal
/// block does not have irreducible determinant.
std::vector<PolyMatrix> peel_factor(const PolyMatrix& x, const std::vector<std::size_t>& block_sizes);

/// Structure of one component as seen by the factorization, for inspection.
struct ComponentStructure {
  PrimaryComponent component;
  std::vector<LayerBasis> layers;
  RatMatrix representation;  // T^-1 * block * T in the good basis
};

/// L == (prod atoms) * right_unit exactly. Each atom is linear with
/// irreducible determinant; right_unit is the identity for monic L.
struct PencilFactorization {
  std::vector<PolyMatrix> atoms;
  PolyMatrix right_unit;
  PolyMatrix right_unit_inv;
  /// deg det(atoms[t]).
  std::vector<std::size_t> atom_det_degrees;
  long shift = 0;
  std::size_t monic_padding = 0;
  std::vector<ComponentStructure> components;
};

/// Throws SingularInputError / UnitInputError for non-full or unit pencils.
PencilFactorization factor_pencil(const Pencil& l);

}  // namespace atomfact
