#include "atomfact/trivialize.hpp"

#include <algorithm>

#include "atomfact/error.hpp"

namespace atomfact {

namespace {

// column dst += s * column src of a scalar matrix.
void col_axpy(RatMatrix& m, std::size_t src, std::size_t dst, const Rat& s) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) += s * m(i, src);
}

void require_relation(const PolyMatrix& c, const PolyMatrix& u) {
  if (c.cols() != u.rows()) throw DimensionError("trivialize: C columns must match U rows");
  if (!(c * u).is_zero()) throw DomainError("trivialize: relation C*U == 0 does not hold");
}

struct TNormalWork {
  RatMatrix d0, d1;
  std::vector<std::size_t> zero, scalar, linear;
  std::size_t iterations = 0;
};

// Runs the T-normal while-loop, recording every column operation in m.
TNormalWork t_normal_impl(const PolyMatrix& c, ColumnTransform& m) {
  if (c.max_degree() > 1) throw DomainError("t_normal_form: C is not linear");
  const std::size_t r = c.rows();
  const std::size_t n = c.cols();
  TNormalWork w{c.coefficient(0), c.coefficient(1), {}, {}, {}, 0};
  SpanTracker a_span(r);

  // A scalar column either joins A or is reduced to zero against A.
  auto absorb_scalar = [&](std::size_t j) {
    const auto v = w.d0.column(j);
    if (auto coef = a_span.express(v)) {
      for (std::size_t k = 0; k < coef->size(); ++k) {
        const Rat s = -(*coef)[k];
        col_axpy(w.d0, w.scalar[k], j, s);
        m.add(w.scalar[k], j, UPoly(s));
      }
      if (!w.d0.column_is_zero(j)) throw InvariantViolation("t_normal_form: scalar reduction left a residue");
      w.zero.push_back(j);
    } else {
      a_span.add(v);
      w.scalar.push_back(j);
    }
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (w.d1.column_is_zero(j))
      absorb_scalar(j);
    else
      w.linear.push_back(j);
  }

  for (;;) {
    SpanTracker span = a_span;
    std::size_t pos = w.linear.size();
    std::vector<Rat> coef;
    for (std::size_t k = 0; k < w.linear.size(); ++k) {
      const auto v = w.d1.column(w.linear[k]);
      if (auto e = span.express(v)) {
        pos = k;
        coef = std::move(*e);
        break;
      }
      span.add(v);
    }
    if (pos == w.linear.size()) break;

    const std::size_t j0 = w.linear[pos];
    const std::size_t na = w.scalar.size();
    // B''_{j0} = sum alpha_i A_i + sum beta_k B''_k over earlier linear columns.
    for (std::size_t k = 0; k < pos; ++k) {
      const Rat s = -coef[na + k];
      const std::size_t src = w.linear[k];
      col_axpy(w.d0, src, j0, s);
      col_axpy(w.d1, src, j0, s);
      m.add(src, j0, UPoly(s));
    }
    for (std::size_t i = 0; i < na; ++i) {
      const Rat s = -coef[i];
      if (!s.is_zero())  // x * A_i lands in the x-coefficient
        for (std::size_t row = 0; row < r; ++row) w.d1(row, j0) += s * w.d0(row, w.scalar[i]);
      m.add(w.scalar[i], j0, UPoly::monomial(s, 1));
    }
    if (!w.d1.column_is_zero(j0)) throw InvariantViolation("t_normal_form: B'' column not cleared");
    w.linear.erase(w.linear.begin() + static_cast<std::ptrdiff_t>(pos));
    absorb_scalar(j0);
    ++w.iterations;
    if (w.iterations > n) throw InvariantViolation("t_normal_form: loop did not terminate");
  }
  return w;
}

std::vector<std::size_t> zero_columns(const PolyMatrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.column_is_zero(j)) out.push_back(j);
  return out;
}

std::vector<std::size_t> zero_rows_of(const PolyMatrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row_is_zero(i)) out.push_back(i);
  return out;
}

TrivOutcome finish(const PolyMatrix& c, const PolyMatrix& u, const ColumnTransform& t) {
  TrivOutcome out{t.forward(), t.inverse(), zero_columns(c * t.forward()), zero_rows_of(t.inverse() * u)};
  std::vector<bool> covered(c.cols(), false);
  for (auto j : out.zero_cols) covered[j] = true;
  for (auto i : out.zero_rows) covered[i] = true;
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
    throw InvariantViolation("trivialize: some index has neither a zero column nor a zero row");
  return out;
}

}  // namespace

PolyMatrix TNormalForm::D() const {
  PolyMatrix out(D0.rows(), D0.cols());
  for (std::size_t i = 0; i < D0.rows(); ++i)
    for (std::size_t j = 0; j < D0.cols(); ++j) out(i, j) = UPoly(std::vector<Rat>{D0(i, j), D1(i, j)});
  return out;
}

TNormalForm t_normal_form(const PolyMatrix& c) {
  ColumnTransform m(c.cols());
  TNormalWork w = t_normal_impl(c, m);
  std::sort(w.scalar.begin(), w.scalar.end());
  std::sort(w.zero.begin(), w.zero.end());
  return TNormalForm{m.forward(), m.inverse(), std::move(w.d0), std::move(w.d1),
                     std::move(w.zero), std::move(w.scalar), std::move(w.linear), w.iterations};
}

TrivOutcome trivialize_linear(const PolyMatrix& c, const PolyMatrix& u) {
  require_relation(c, u);
  if (c.max_degree() > 1) throw DomainError("trivialize_linear: C is not linear");
  ColumnTransform t(c.cols());
  if (u.is_zero()) return finish(c, u, t);
  TNormalWork w = t_normal_impl(c, t);

  const std::size_t na = w.scalar.size();
  if (na > 0 && !w.linear.empty()) {
    // Rows I on which A is invertible, then express every B column there
    // as a combination of A columns with coefficients a + b x.
    RatMatrix a(c.rows(), na);
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t i = 0; i < c.rows(); ++i) a(i, k) = w.d0(i, w.scalar[k]);
    const auto rows = rref(a.transpose()).pivot_cols;
    if (rows.size() != na) throw InvariantViolation("trivialize_linear: A columns are dependent");
    RatMatrix a_i(na, na);
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t k = 0; k < na; ++k) a_i(p, k) = a(rows[p], k);
    std::vector<Rat> rhs0(na), rhs1(na);
    for (auto j : w.linear) {
      for (std::size_t p = 0; p < na; ++p) {
        rhs0[p] = w.d0(rows[p], j);
        rhs1[p] = w.d1(rows[p], j);
      }
      const auto coef0 = solve(a_i, rhs0);
      const auto coef1 = solve(a_i, rhs1);
      for (std::size_t k = 0; k < na; ++k) {
        const UPoly g(std::vector<Rat>{-coef0[k], -coef1[k]});
        if (!g.is_zero()) t.add(w.scalar[k], j, g);
      }
    }
  }
  return finish(c, u, t);
}

TrivOutcome trivialize_general(const PolyMatrix& c, const PolyMatrix& u) {
  require_relation(c, u);
  const std::size_t n = c.cols();
  ColumnTransform t(n);
  if (u.is_zero() || rank_fraction_field(c) == n) return finish(c, u, t);

  PolyMatrix w = c;
  std::size_t col = 0;
  for (std::size_t i = 0; i < w.rows() && col < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t k = col; k < n; ++k)
        if (!w(i, k).is_zero() && (best == n || w(i, k).degree() < w(i, best).degree())) best = k;
      if (best == n) break;
      if (best != col) {
        w.swap_columns(best, col);
        t.swap(best, col);
      }
      bool done = true;
      for (std::size_t k = col + 1; k < n; ++k) {
        if (w(i, k).is_zero()) continue;
        const UPoly q = divmod(w(i, k), w(i, col)).quotient;
        w.add_scaled_column(col, k, -q);
        t.add(col, k, -q);
        if (!w(i, k).is_zero()) done = false;
      }
      if (done) break;
    }
    if (w(i, col).is_zero()) continue;
    const Rat s = inverse(primitive_part(w(i, col)).content);
    w.scale_column(col, s);
    t.scale(col, s);
    ++col;
  }
  return finish(c, u, t);
}

bool is_trivialization(const PolyMatrix& c, const PolyMatrix& u, const TrivOutcome& t) {
  const std::size_t n = c.cols();
  if (t.N.rows() != n || t.N.cols() != n || t.N_inv.rows() != n || t.N_inv.cols() != n) return false;
  if (!(t.N * t.N_inv).is_identity()) return false;
  if (!is_unit(t.N)) return false;
  const PolyMatrix cn = c * t.N;
  const PolyMatrix nu = t.N_inv * u;
  for (std::size_t i = 0; i < n; ++i)
    if (!cn.column_is_zero(i) && !nu.row_is_zero(i)) return false;
  for (auto j : t.zero_cols)
    if (j >= n || !cn.column_is_zero(j)) return false;
  for (auto i : t.zero_rows)
    if (i >= n || !nu.row_is_zero(i)) return false;
  return true;
}

}  // namespace atomfact
