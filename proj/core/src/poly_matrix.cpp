#include "atomfact/poly_matrix.hpp"

#include <algorithm>

#include "atomfact/error.hpp"
#include "atomfact/unifactor.hpp"

namespace atomfact {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<UPoly> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionError("PolyMatrix: entry count does not match shape");
}

PolyMatrix::PolyMatrix(const RatMatrix& m) : PolyMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = UPoly(m(i, j));
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = UPoly(1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<UPoly>& diag) {
  PolyMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : a_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const UPoly& e) { return e.is_zero(); });
}

bool PolyMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

RatMatrix PolyMatrix::coefficient(int k) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).coeff(k);
  return m;
}

RatMatrix PolyMatrix::eval(const Rat& a) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(a);
  return m;
}

PolyMatrix PolyMatrix::shift(const Rat& a) const {
  PolyMatrix m = *this;
  for (auto& e : m.a_) e = e.shift(a);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("PolyMatrix::block out of range");
  PolyMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("PolyMatrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("PolyMatrix product: inner dimensions differ");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const UPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const UPoly& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_product(aik, bkj);
      }
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("PolyMatrix sum: shapes differ");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("PolyMatrix difference: shapes differ");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

PolyMatrix operator*(const Rat& s, const PolyMatrix& a) {
  PolyMatrix c = a;
  for (auto& e : c.a_) e *= s;
  return c;
}

void PolyMatrix::add_scaled_column(std::size_t src, std::size_t dst, const UPoly& g) {
  if (src >= cols_ || dst >= cols_ || src == dst) throw DimensionError("add_scaled_column: bad indices");
  if (g.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const UPoly& s = (*this)(i, src);
    if (!s.is_zero()) (*this)(i, dst).add_product(s, g);
  }
}

void PolyMatrix::add_scaled_row(std::size_t src, std::size_t dst, const UPoly& g) {
  if (src >= rows_ || dst >= rows_ || src == dst) throw DimensionError("add_scaled_row: bad indices");
  if (g.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const UPoly& s = (*this)(src, j);
    if (!s.is_zero()) (*this)(dst, j).add_product(s, g);
  }
}

void PolyMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i >= cols_ || j >= cols_) throw DimensionError("swap_columns: bad indices");
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void PolyMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= rows_) throw DimensionError("swap_rows: bad indices");
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void PolyMatrix::scale_column(std::size_t j, const Rat& s) {
  if (j >= cols_) throw DimensionError("scale_column: bad index");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) *= s;
}

void PolyMatrix::scale_row(std::size_t i, const Rat& s) {
  if (i >= rows_) throw DimensionError("scale_row: bad index");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) *= s;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyMatrix block_embed(const PolyMatrix& m, std::size_t offset, std::size_t n) {
  if (!m.is_square() || offset + m.rows() > n) throw DimensionError("block_embed: block does not fit");
  PolyMatrix out = PolyMatrix::identity(n);
  out.set_block(offset, offset, m);
  return out;
}

PolyMatrix permutation_matrix(const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  PolyMatrix p(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || seen[order[k]]) throw DomainError("permutation_matrix: not a permutation");
    seen[order[k]] = true;
    p(order[k], k) = UPoly(1);
  }
  return p;
}

Pencil::Pencil(RatMatrix a0, RatMatrix a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
  if (!a0_.is_square() || a0_.rows() != a1_.rows() || a0_.cols() != a1_.cols())
    throw DimensionError("Pencil: coefficients must be square and of equal size");
}

Pencil Pencil::from_poly(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("Pencil::from_poly: non-square matrix");
  if (m.max_degree() > 1) throw DomainError("Pencil::from_poly: entries of degree > 1");
  return Pencil(m.coefficient(0), m.coefficient(1));
}

PolyMatrix Pencil::to_poly() const {
  PolyMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = UPoly(std::vector<Rat>{a0_(i, j), a1_(i, j)});
  return m;
}

bool Pencil::is_monic() const { return !determinant(a1_).is_zero(); }

namespace {

// Leibniz bound on the degree of det(m).
int det_degree_bound(const PolyMatrix& m) {
  long rows = 0, cols = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int d = -1;
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    if (d < 0) return -1;
    rows += d;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int d = -1;
    for (std::size_t i = 0; i < m.rows(); ++i) d = std::max(d, m(i, j).degree());
    if (d < 0) return -1;
    cols += d;
  }
  return static_cast<int>(std::min(rows, cols));
}

}  // namespace

UPoly det(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("det of a non-square matrix");
  if (m.rows() == 0) return UPoly(1);
  const int bound = det_degree_bound(m);
  if (bound < 0) return {};  // a zero row or column
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(static_cast<std::size_t>(bound) + 1);
  for (long a = 0; a <= bound; ++a) pts.emplace_back(Rat(a), determinant(m.eval(Rat(a))));
  return interpolate(pts);
}

bool is_full(const PolyMatrix& m) { return !det(m).is_zero(); }

bool is_unit(const PolyMatrix& m) {
  const UPoly d = det(m);
  return d.degree() == 0;
}

PolyMatrix invert_unit(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("invert_unit: non-square matrix");
  if (!is_unit(m)) throw DomainError("invert_unit: matrix is not a unit");
  const std::size_t n = m.rows();
  // Adjugate entries have degree at most the Leibniz bound of det.
  const int bound = std::max(det_degree_bound(m), 0);
  std::vector<RatMatrix> samples;
  samples.reserve(static_cast<std::size_t>(bound) + 1);
  for (long a = 0; a <= bound; ++a) {
    auto inv = inverse(m.eval(Rat(a)));
    if (!inv) throw InvariantViolation("unit matrix singular at an evaluation point");
    samples.push_back(std::move(*inv));
  }
  PolyMatrix out(n, n);
  std::vector<std::pair<Rat, Rat>> pts(samples.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < samples.size(); ++k) pts[k] = {Rat(static_cast<long>(k)), samples[k](i, j)};
      out(i, j) = interpolate(pts);
    }
  if (!(m * out).is_identity()) throw InvariantViolation("invert_unit: interpolated inverse does not check");
  return out;
}

std::size_t rank_fraction_field(const PolyMatrix& m) {
  const std::size_t cap = std::min(m.rows(), m.cols());
  const int maxdeg = m.max_degree();
  if (maxdeg < 0) return 0;
  const long nodes = static_cast<long>(cap) * maxdeg + 1;
  std::size_t best = 0;
  for (long a = 0; a < nodes && best < cap; ++a) best = std::max(best, rank(m.eval(Rat(a))));
  return best;
}

bool is_atom(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("is_atom: non-square matrix");
  const UPoly d = det(m);
  if (d.is_zero()) throw DomainError("is_atom: matrix is not full");
  return is_irreducible(d);
}

std::uint64_t encoding_size(const PolyMatrix& m) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e = std::max(e, encoding_size(m(i, j)));
  return static_cast<std::uint64_t>(m.rows() * m.cols()) * e;
}

std::uint64_t encoding_size(const RatMatrix& m) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e = std::max(e, encoding_size(m(i, j)));
  return static_cast<std::uint64_t>(m.rows() * m.cols()) * e;
}

void ColumnTransform::add(std::size_t src, std::size_t dst, const UPoly& g) {
  fwd_.add_scaled_column(src, dst, g);
  inv_.add_scaled_row(dst, src, -g);
}

void ColumnTransform::swap(std::size_t i, std::size_t j) {
  fwd_.swap_columns(i, j);
  inv_.swap_rows(i, j);
}

void ColumnTransform::scale(std::size_t j, const Rat& s) {
  if (s.is_zero()) throw DomainError("ColumnTransform::scale by zero");
  fwd_.scale_column(j, s);
  inv_.scale_row(j, atomfact::inverse(s));
}

void ColumnTransform::compose(const PolyMatrix& unit, const PolyMatrix& unit_inverse) {
  fwd_ = fwd_ * unit;
  inv_ = unit_inverse * inv_;
}

void RowTransform::add(std::size_t src, std::size_t dst, const UPoly& g) {
  fwd_.add_scaled_row(src, dst, g);
  inv_.add_scaled_column(dst, src, -g);
}

void RowTransform::swap(std::size_t i, std::size_t j) {
  fwd_.swap_rows(i, j);
  inv_.swap_columns(i, j);
}

void RowTransform::scale(std::size_t i, const Rat& s) {
  if (s.is_zero()) throw DomainError("RowTransform::scale by zero");
  fwd_.scale_row(i, s);
  inv_.scale_column(i, atomfact::inverse(s));
}

void RowTransform::compose(const PolyMatrix& unit, const PolyMatrix& unit_inverse) {
  fwd_ = unit * fwd_;
  inv_ = inv_ * unit_inverse;
}

}  // namespace atomfact
