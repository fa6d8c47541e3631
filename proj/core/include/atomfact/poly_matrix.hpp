#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "atomfact/poly.hpp"
#include "atomfact/rat_matrix.hpp"

namespace atomfact {

/// Dense row-major matrix over Q[x].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<UPoly> entries);
  /// Constant matrix.
  explicit PolyMatrix(const RatMatrix& m);

  static PolyMatrix identity(std::size_t n);
  /// Square matrix with the given diagonal.
  static PolyMatrix diagonal(const std::vector<UPoly>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  UPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const UPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Largest entry degree; -1 for the zero matrix.
  int max_degree() const;
  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  bool column_is_zero(std::size_t j) const;
  bool is_identity() const;

  /// Coefficient matrix of x^k.
  RatMatrix coefficient(int k) const;
  RatMatrix eval(const Rat& a) const;
  /// Substitutes x -> x + a in every entry.
  PolyMatrix shift(const Rat& a) const;

  PolyMatrix transpose() const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Rat& s, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  // In-place elementary operations.
  /// column dst += g * column src.
  void add_scaled_column(std::size_t src, std::size_t dst, const UPoly& g);
  /// row dst += g * row src.
  void add_scaled_row(std::size_t src, std::size_t dst, const UPoly& g);
  void swap_columns(std::size_t i, std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  void scale_column(std::size_t j, const Rat& s);
  void scale_row(std::size_t i, const Rat& s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UPoly> a_;
};

/// a (+) b: block diagonal with a in the top-left.
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
/// Places m inside an n x n identity with its top-left corner at (offset, offset).
PolyMatrix block_embed(const PolyMatrix& m, std::size_t offset, std::size_t n);
/// Column permutation matrix: (M * perm_matrix(order)) has column k equal to column order[k] of M.
PolyMatrix permutation_matrix(const std::vector<std::size_t>& order);

/// Linear pencil A0 + A1 * x with square scalar coefficients.
class Pencil {
 public:
  Pencil() = default;
  Pencil(RatMatrix a0, RatMatrix a1);
  /// Throws DomainError when some entry has degree > 1, DimensionError if not square.
  static Pencil from_poly(const PolyMatrix& m);

  std::size_t dim() const { return a0_.rows(); }
  const RatMatrix& a0() const { return a0_; }
  const RatMatrix& a1() const { return a1_; }
  PolyMatrix to_poly() const;
  bool is_monic() const;

  friend bool operator==(const Pencil& a, const Pencil& b) = default;

 private:
  RatMatrix a0_;
  RatMatrix a1_;
};

/// Exact determinant by evaluation at 0, 1, ..., D (D the row/column degree
/// bound, at most n*maxdeg) with Bareiss
/// elimination at each node, then interpolation.
UPoly det(const PolyMatrix& m);
bool is_full(const PolyMatrix& m);
bool is_unit(const PolyMatrix& m);
/// Polynomial inverse of a unit. Throws DomainError when m is not a unit.
PolyMatrix invert_unit(const PolyMatrix& m);
/// Rank over Q(x), from scalar ranks at min(rows, cols) * maxdeg + 1 nodes.
std::size_t rank_fraction_field(const PolyMatrix& m);
/// det(m) irreducible over Q. Throws DomainError when m is not full.
bool is_atom(const PolyMatrix& m);

/// kd * max entry size for a k x d matrix.
std::uint64_t encoding_size(const PolyMatrix& m);
std::uint64_t encoding_size(const RatMatrix& m);

/// Accumulates a sequence of elementary column operations applied to some
/// matrix as right multiplication by `forward()`, with `inverse()` kept
/// alongside so forward() * inverse() == I at all times.
class ColumnTransform {
 public:
  explicit ColumnTransform(std::size_t n) : fwd_(PolyMatrix::identity(n)), inv_(PolyMatrix::identity(n)) {}

  /// column dst += g * column src.
  void add(std::size_t src, std::size_t dst, const UPoly& g);
  void swap(std::size_t i, std::size_t j);
  /// column j *= s, s nonzero.
  void scale(std::size_t j, const Rat& s);
  /// Right-multiplies by an arbitrary unit whose inverse is known.
  void compose(const PolyMatrix& unit, const PolyMatrix& unit_inverse);

  const PolyMatrix& forward() const { return fwd_; }
  const PolyMatrix& inverse() const { return inv_; }

 private:
  PolyMatrix fwd_;
  PolyMatrix inv_;
};

/// Left-multiplication counterpart of ColumnTransform.
class RowTransform {
 public:
  explicit RowTransform(std::size_t n) : fwd_(PolyMatrix::identity(n)), inv_(PolyMatrix::identity(n)) {}

  /// row dst += g * row src.
  void add(std::size_t src, std::size_t dst, const UPoly& g);
  void swap(std::size_t i, std::size_t j);
  void scale(std::size_t i, const Rat& s);
  /// Left-multiplies by a unit whose inverse is known.
  void compose(const PolyMatrix& unit, const PolyMatrix& unit_inverse);

  const PolyMatrix& forward() const { return fwd_; }
  const PolyMatrix& inverse() const { return inv_; }

 private:
  PolyMatrix fwd_;
  PolyMatrix inv_;
};

}  // namespace atomfact
