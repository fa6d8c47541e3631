#include "atomfact/higman.hpp"

#include "atomfact/error.hpp"

namespace atomfact {

HigmanStep higman_step(const PolyMatrix& m, std::size_t i, std::size_t j, const EntrySplit& split) {
  if (!m.is_square()) throw DimensionError("higman_step: non-square matrix");
  const std::size_t n = m.rows();
  if (i >= n || j >= n) throw DimensionError("higman_step: index out of range");
  if (split.a + split.b * split.c != m(i, j)) throw DomainError("higman_step: split does not reproduce the entry");

  HigmanStep out{direct_sum(m, PolyMatrix::identity(1)), PolyMatrix::identity(n + 1),
                 PolyMatrix::identity(n + 1)};
  out.M(i, j) = split.a;
  out.M(i, n) = -split.b;
  out.M(n, j) = split.c;
  out.P(i, n) = split.b;
  out.Q(n, j) = -split.c;
  return out;
}

HigmanOutcome linearize(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("linearize: non-square matrix");
  const std::size_t d = m.rows();
  std::size_t padding = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) padding += static_cast<std::size_t>(std::max(m(i, j).degree() - 1, 0));

  const std::size_t n = d + padding;
  PolyMatrix w = direct_sum(m, PolyMatrix::identity(padding));
  PolyMatrix p = PolyMatrix::identity(n);
  PolyMatrix q = PolyMatrix::identity(n);
  const UPoly x = UPoly::x();

  // Each step works on a fresh padding index t whose row and column of w are
  // still those of the identity, so the gadget can be written in place.
  std::size_t t = d;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t col = j;
      while (w(i, col).degree() >= 2) {
        const UPoly f = w(i, col);
        const UPoly a(f.coeff(0));
        const UPoly b = exact_div(f - a, x);
        w(i, col) = a;
        w(i, t) = -b;
        w(t, col) = x;
        // P <- P * (I + b E_{i,t}),  Q <- (I - x E_{t,col}) * Q
        p.add_scaled_column(i, t, b);
        q.add_scaled_row(col, t, -x);
        col = t++;
      }
    }
  }
  if (t != n) throw InvariantViolation("linearize: padding count mismatch");
  return HigmanOutcome{std::move(p), Pencil::from_poly(w), std::move(q), d, padding};
}

}  // namespace atomfact
