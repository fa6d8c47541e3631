#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atomfact/rational.hpp"

namespace atomfact {

/// Dense univariate polynomial over Q, coefficients in ascending degree order.
/// The empty coefficient vector is the zero polynomial; otherwise the last
/// coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rat> coeffs);

  /// The polynomial x.
  static UPoly x();
  /// c * x^k.
  static UPoly monomial(const Rat& c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  const Rat& coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  const Rat& lead() const;

  Rat eval(const Rat& a) const;
  UPoly derivative() const;
  /// Divides by the leading coefficient. Zero stays zero.
  UPoly monic() const;
  /// f(x + a).
  UPoly shift(const Rat& a) const;
  bool has_integer_coeffs() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rat& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }

  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// a += b * c without materializing the product.
  void add_product(const UPoly& b, const UPoly& c);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const UPoly& f);

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// f = q*g + r with deg r < deg g. Throws DomainError when g is zero.
DivMod divmod(const UPoly& f, const UPoly& g);
/// Exact quotient; throws DomainError if g does not divide f.
UPoly exact_div(const UPoly& f, const UPoly& g);
/// Monic gcd. gcd(f, 0) = monic(f). Throws DomainError when both are zero.
UPoly gcd(const UPoly& f, const UPoly& g);
/// Monic lcm; lcm with zero is zero.
UPoly lcm(const UPoly& f, const UPoly& g);
UPoly pow(const UPoly& f, unsigned e);

/// The unique polynomial of degree < #points through the given nodes.
/// Throws DomainError on duplicate abscissae.
UPoly interpolate(std::span<const std::pair<Rat, Rat>> points);

/// Content and primitive part: f = content * primitive, primitive has
/// coprime integer coefficients and positive leading coefficient.
struct ContentSplit {
  Rat content;
  UPoly primitive;
};
ContentSplit primitive_part(const UPoly& f);

/// Bit size t * max_i size(a_i) for a polynomial of degree t; zero for constants.
std::uint64_t encoding_size(const UPoly& f);

/// Bound B with |c| <= B for every coefficient c of every integer factor
/// of f: ceil(2^deg * ||f||_2). Requires nonzero f with integer coefficients.
Int mignotte_bound(const UPoly& f);

/// Ordering used for deterministic factor lists: degree, then coefficients
/// lexicographically from the constant term upwards.
bool canonical_less(const UPoly& a, const UPoly& b);

}  // namespace atomfact
