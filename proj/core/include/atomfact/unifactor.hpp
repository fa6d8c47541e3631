#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "atomfact/poly.hpp"

namespace atomfact {

/// Polynomial over the prime field F_p, ascending coefficients in [0, p).
struct ZpPoly {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  friend bool operator==(const ZpPoly&, const ZpPoly&) = default;
};

/// Integer polynomial modulo p^k, ascending coefficients in [0, p^k).
struct ModPoly {
  Int modulus;
  std::vector<Int> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  friend bool operator==(const ModPoly&, const ModPoly&) = default;
};

struct FactorPower {
  UPoly factor;
  unsigned multiplicity = 1;
};

/// content * prod factor^multiplicity == input. Factors are primitive
/// integer polynomials with positive leading coefficient, irreducible over Q,
/// sorted by canonical_less.
struct IrreducibleFactorization {
  Rat content;
  std::vector<FactorPower> factors;

  /// Number of irreducible factors counted with multiplicity.
  unsigned omega() const;
  UPoly expand() const;
};

/// Yun decomposition. Parts are primitive with positive leading coefficient,
/// pairwise coprime and squarefree; multiplicities strictly increase.
/// Throws DomainError for the zero polynomial.
std::vector<FactorPower> squarefree_decompose(const UPoly& f);

/// Reduces an integer polynomial mod p.
ZpPoly reduce_mod(const UPoly& f, std::uint64_t p);

/// Monic irreducible factors of f over F_p, sorted by degree then
/// coefficients. Throws DomainError when p divides the leading coefficient
/// or f is not squarefree mod p.
std::vector<ZpPoly> factor_mod_p(const UPoly& f, std::uint64_t p);

/// Lifts a factorization f = lc(f) * prod factors (mod p) to one mod p^k.
/// Factors must be monic and pairwise coprime mod p. Returned factors are
/// monic mod p^k and reduce to the inputs mod p.
std::vector<ModPoly> hensel_lift(std::span<const ZpPoly> factors, const UPoly& f, unsigned k);

/// Complete factorization over Q. Throws DomainError for zero input.
IrreducibleFactorization factor_rational(const UPoly& f);

/// True iff deg f >= 1 and f is irreducible over Q.
bool is_irreducible(const UPoly& f);

/// Smallest prime >= 3 that keeps f squarefree mod p and does not divide lc(f).
/// f must be a squarefree integer polynomial.
std::uint64_t choose_prime(const UPoly& f);

}  // namespace atomfact
