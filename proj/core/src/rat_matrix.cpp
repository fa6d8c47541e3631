#include "atomfact/rat_matrix.hpp"

#include <algorithm>

#include "atomfact/error.hpp"

namespace atomfact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionError("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, std::span<const std::vector<Rat>> columns) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Rat> RatMatrix::column(std::size_t j) const {
  std::vector<Rat> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool RatMatrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("RatMatrix::block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("RatMatrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("RatMatrix product: inner dimensions differ");
  RatMatrix c(a.rows_, b.cols_);
  Rat t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        t = aik;
        t *= bkj;
        c(i, j) += t;
      }
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RatMatrix sum: shapes differ");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RatMatrix difference: shapes differ");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw DimensionError("RatMatrix::apply: vector length mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Echelon rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rat inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) {
  // Row reduction without back substitution.
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rat inv = inverse(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Rat f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols());
    v[free] = Rat(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<Int> a(n * n);
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).num() * (l / m(i, j).den());
    scale *= l;
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Rat(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Int det = a[n * n - 1];
  if (sign < 0) det = -det;
  return Rat(det, scale);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RatMatrix::identity(n));
  Echelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::vector<Rat> solve(const RatMatrix& m, std::span<const Rat> b) {
  if (!m.is_square() || b.size() != m.rows()) throw DimensionError("solve: shape mismatch");
  const std::size_t n = m.rows();
  RatMatrix aug(n, n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n) = b[i];
  Echelon e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw DomainError("solve: singular system");
  return e.reduced.column(n);
}

RatMatrix eval_at(const UPoly& f, const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("eval_at: matrix must be square");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    const Rat& c = f.coeff(i);
    if (!c.is_zero())
      for (std::size_t k = 0; k < n; ++k) acc(k, k) += c;
  }
  return acc;
}

RatMatrix companion(const UPoly& monic_f) {
  if (monic_f.degree() < 1 || !monic_f.lead().is_one())
    throw DomainError("companion matrix needs a monic polynomial of positive degree");
  const auto k = static_cast<std::size_t>(monic_f.degree());
  RatMatrix c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = Rat(1);
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -monic_f.coeff(static_cast<int>(i));
  return c;
}

std::optional<std::vector<Rat>> SpanTracker::express(std::span<const Rat> v) const {
  if (v.size() != dim_) throw DimensionError("SpanTracker: vector length mismatch");
  std::vector<Rat> w(v.begin(), v.end());
  std::vector<Rat> coeffs(accepted_.size());
  for (const auto& row : basis_) {
    const Rat f = w[row.pivot];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!row.vec[i].is_zero()) w[i] -= f * row.vec[i];
    for (std::size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero()) coeffs[i] += f * row.combo[i];
  }
  if (std::any_of(w.begin(), w.end(), [](const Rat& r) { return !r.is_zero(); })) return std::nullopt;
  return coeffs;
}

bool SpanTracker::add(std::span<const Rat> v) {
  if (v.size() != dim_) throw DimensionError("SpanTracker: vector length mismatch");
  std::vector<Rat> w(v.begin(), v.end());
  std::vector<Rat> combo(accepted_.size() + 1);
  combo.back() = Rat(1);
  for (const auto& row : basis_) {
    const Rat f = w[row.pivot];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!row.vec[i].is_zero()) w[i] -= f * row.vec[i];
    for (std::size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero()) combo[i] -= f * row.combo[i];
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  const Rat inv = inverse(w[pivot]);
  for (auto& x : w) x *= inv;
  for (auto& x : combo) x *= inv;
  // Keep earlier rows free of the new pivot so sequential reduction stays valid.
  for (auto& row : basis_) {
    const Rat f = row.vec[pivot];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!w[i].is_zero()) row.vec[i] -= f * w[i];
    row.combo.resize(combo.size());
    for (std::size_t i = 0; i < combo.size(); ++i)
      if (!combo[i].is_zero()) row.combo[i] -= f * combo[i];
  }
  basis_.push_back({std::move(w), pivot, std::move(combo)});
  accepted_.emplace_back(v.begin(), v.end());
  return true;
}

}  // namespace atomfact
