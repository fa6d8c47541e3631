#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "atomfact/poly.hpp"
#include "atomfact/rational.hpp"

namespace atomfact {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static RatMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static RatMatrix from_columns(std::size_t rows, std::span<const std::vector<Rat>> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rat> column(std::size_t j) const;
  std::vector<Rat> row(std::size_t i) const;
  bool is_zero() const;
  bool column_is_zero(std::size_t j) const;

  RatMatrix transpose() const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& s, const RatMatrix& a);
  std::vector<Rat> apply(std::span<const Rat> v) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

/// Reduced row echelon form with leftmost pivots.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column,
/// in increasing order of the free column index.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Determinant by fraction-free Bareiss elimination after clearing
/// row denominators. Throws DimensionError for non-square input.
Rat determinant(const RatMatrix& m);

/// Inverse, or nullopt for a singular matrix.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Solution x of m x = b for invertible square m. Throws DomainError if singular.
std::vector<Rat> solve(const RatMatrix& m, std::span<const Rat> b);

/// Evaluates f at a square matrix.
RatMatrix eval_at(const UPoly& f, const RatMatrix& a);

/// Companion matrix of a monic polynomial of degree k >= 1: ones on the
/// subdiagonal and -f_0..-f_{k-1} in the last column.
RatMatrix companion(const UPoly& monic_f);

/// Incremental independence checker. Vectors are offered one at a time;
/// independent ones join the span, dependent ones are reported together
/// with their coefficients in terms of the accepted vectors.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  /// Coefficients c (indexed like accepted()) with v = sum c_i accepted_i
  /// when v is in the span; nullopt otherwise. Does not modify the tracker.
  std::optional<std::vector<Rat>> express(std::span<const Rat> v) const;
  bool contains(std::span<const Rat> v) const { return express(v).has_value(); }
  /// Adds v if independent. Returns true when v was added.
  bool add(std::span<const Rat> v);

  std::size_t size() const { return accepted_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<Rat>>& accepted() const { return accepted_; }

 private:
  struct Row {
    std::vector<Rat> vec;     // reduced vector
    std::size_t pivot;        // pivot coordinate, vec[pivot] == 1
    std::vector<Rat> combo;   // vec = sum combo_i accepted_i
  };
  std::size_t dim_;
  std::vector<std::vector<Rat>> accepted_;
  std::vector<Row> basis_;
};

}  // namespace atomfact
