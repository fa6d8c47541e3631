#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atomfact/higman.hpp"
#include "atomfact/pencil_factor.hpp"
#include "atomfact/poly_matrix.hpp"
#include "atomfact/telemetry.hpp"

namespace atomfact {

struct AtomCertificate {
  UPoly det;
  bool irreducible = false;
};

/// M == atoms[0] * atoms[1] * ... * atoms[r-1].
struct AtomFactorization {
  std::vector<PolyMatrix> atoms;
  std::vector<AtomCertificate> certificates;
};

/// Bordered identity P * (F_1 ... F_{j-1}) * right == [[G, *], [0, V]]
/// with V a unit and right == F_j * N for the accumulated trivializers N.
struct ExtractionState {
  PolyMatrix P;
  std::vector<PolyMatrix> remaining;  // F_1 ... F_j
  std::vector<PolyMatrix> prefix;     // prefix[i] == F_1 ... F_i, prefix[0] == I
  std::vector<std::size_t> det_degrees;  // deg det F_i
  PolyMatrix right;
  PolyMatrix G;
  std::size_t m = 0;
  /// Extracted atoms, rightmost first.
  std::vector<PolyMatrix> extracted;
};

/// State for M (+) I == P * F_1 ... F_s * U, from a Higman outcome and a
/// factorization of its pencil.
ExtractionState begin_extraction(const PolyMatrix& m, const HigmanOutcome& h, const PencilFactorization& pf);

/// Exact check of the bordered identity on the first m columns.
bool bordered_identity_holds(const ExtractionState& s);

/// Peels the rightmost atom off G. Requires at least two remaining factors.
/// Throws InvariantViolation when a runtime check of the construction fails.
PolyMatrix extract_one(ExtractionState& s, Telemetry* telemetry = nullptr);

struct FactorOptions {
  Telemetry* telemetry = nullptr;
};

/// Complete factorization of a full non-unit square matrix. Throws
/// DimensionError, SingularInputError or UnitInputError on bad input.
AtomFactorization factor_matrix(const PolyMatrix& m, const FactorOptions& options = {});

struct VerificationReport {
  bool product_ok = false;  // (i)
  bool atoms_ok = false;    // (ii)
  bool det_ok = false;      // (iii)
  bool count_ok = false;    // (iv)
  std::size_t expected_count = 0;
  std::string detail;

  bool ok() const { return product_ok && atoms_ok && det_ok && count_ok; }
  /// Name of the first failing clause, empty when all pass.
  std::string first_failure() const;
};

VerificationReport verify_factorization(const PolyMatrix& m, const std::vector<PolyMatrix>& atoms);

}  // namespace atomfact
