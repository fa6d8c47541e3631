#pragma once

#include <cstddef>
#include <vector>

#include "atomfact/poly_matrix.hpp"

namespace atomfact {

/// D = C * M split into zero columns (J1), independent scalar columns A (J2)
/// and linear columns B = B' + B'' x (J3), with [A B''] of full column rank.
struct TNormalForm {
  PolyMatrix M;
  PolyMatrix M_inv;
  RatMatrix D0;
  RatMatrix D1;
  std::vector<std::size_t> zero_cols;
  std::vector<std::size_t> scalar_cols;
  std::vector<std::size_t> linear_cols;
  /// Number of while-loop iterations executed.
  std::size_t iterations = 0;

  /// D0 + D1 x.
  PolyMatrix D() const;
};

/// Unimodular N with, for every index i, column i of C*N zero or row i of
/// N^-1 * U zero. zero_cols and zero_rows are the observed patterns.
struct TrivOutcome {
  PolyMatrix N;
  PolyMatrix N_inv;
  std::vector<std::size_t> zero_cols;
  std::vector<std::size_t> zero_rows;
};

/// Throws DomainError if some entry of C has degree > 1.
TNormalForm t_normal_form(const PolyMatrix& c);

/// C linear, C*U == 0. Throws DomainError when the relation fails or C is not linear.
TrivOutcome trivialize_linear(const PolyMatrix& c, const PolyMatrix& u);

/// Any C with C*U == 0. Column-echelon compression C*N = [H | 0] with H of
/// full column rank. Throws DomainError when the relation fails.
TrivOutcome trivialize_general(const PolyMatrix& c, const PolyMatrix& u);

/// Checks the outcome literally against C and U: N*N_inv == I, det N a
/// nonzero constant, and the zero column / zero row disjunction per index.
bool is_trivialization(const PolyMatrix& c, const PolyMatrix& u, const TrivOutcome& t);

}  // namespace atomfact
