#include "atomfact/pencil_factor.hpp"

#include <algorithm>

#include "atomfact/error.hpp"
#include "atomfact/trivialize.hpp"
#include "atomfact/unifactor.hpp"

namespace atomfact {

namespace {

Pencil transpose(const Pencil& l) { return Pencil(l.a0().transpose(), l.a1().transpose()); }

RatMatrix scalar_direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

// Minimal polynomial of A relative to v: the monic generator of {g : g(A) v = 0}.
UPoly krylov_annihilator(const RatMatrix& a, std::vector<Rat> v) {
  SpanTracker span(a.rows());
  for (;;) {
    if (auto c = span.express(v)) {
      const int k = static_cast<int>(c->size());
      UPoly g = UPoly::monomial(Rat(1), k);
      for (int i = 0; i < k; ++i) g -= UPoly::monomial((*c)[static_cast<std::size_t>(i)], i);
      return g;
    }
    span.add(v);
    v = a.apply(v);
  }
}

}  // namespace

MonicOutcome monic_reduce(const Pencil& l, Side side) {
  if (side == Side::left) {
    MonicOutcome r = monic_reduce(transpose(l), Side::right);
    return MonicOutcome{Side::left,       r.U.transpose(),       r.U_inv.transpose(), r.S.transpose(),
                        r.S_inv.transpose(), transpose(r.W), r.padding};
  }
  const PolyMatrix lp = l.to_poly();
  const std::size_t n = l.dim();
  if (det(lp).is_zero()) throw SingularInputError();
  if (l.is_monic()) throw DomainError("monic_reduce: pencil is already monic");

  const TNormalForm tnf = t_normal_form(lp);
  if (!tnf.zero_cols.empty()) throw InvariantViolation("monic_reduce: full pencil has a zero column in T-normal form");
  const std::size_t e = tnf.scalar_cols.size();
  const std::size_t n1 = n - e;
  if (e == 0) throw InvariantViolation("monic_reduce: non-monic pencil without scalar columns");

  ColumnTransform t(n);
  t.compose(tnf.M, tnf.M_inv);
  std::vector<std::size_t> order = tnf.linear_cols;
  order.insert(order.end(), tnf.scalar_cols.begin(), tnf.scalar_cols.end());
  const PolyMatrix pi = permutation_matrix(order);
  t.compose(pi, pi.transpose());

  // Rows on which the scalar block is invertible go to the bottom.
  RatMatrix a(n, e);
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = 0; i < n; ++i) a(i, k) = tnf.D0(i, tnf.scalar_cols[k]);
  const auto piv = rref(a.transpose()).pivot_cols;
  if (piv.size() != e) throw InvariantViolation("monic_reduce: scalar columns are dependent");
  std::vector<std::size_t> row_order;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(piv.begin(), piv.end(), i)) row_order.push_back(i);
  row_order.insert(row_order.end(), piv.begin(), piv.end());
  RatMatrix prow(n, n);
  for (std::size_t k = 0; k < n; ++k) prow(k, row_order[k]) = Rat(1);

  const PolyMatrix x = PolyMatrix(prow) * lp * t.forward();
  const auto a2_inv = inverse(x.block(n1, n1, e, e).coefficient(0));
  if (!a2_inv) throw InvariantViolation("monic_reduce: pivot block is singular");
  const RatMatrix a1 = x.block(0, n1, n1, e).coefficient(0);
  const PolyMatrix g = Rat(-1) * (PolyMatrix(*a2_inv) * x.block(n1, 0, e, n1));
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t j = 0; j < n1; ++j) t.add(n1 + k, j, g(k, j));

  RatMatrix clear = RatMatrix::identity(n);
  clear.set_block(0, n1, Rat(-1) * (a1 * *a2_inv));
  const RatMatrix s = scalar_direct_sum(RatMatrix::identity(n1), *a2_inv) * clear * prow;
  auto s_inv = inverse(s);
  if (!s_inv) throw InvariantViolation("monic_reduce: scalar transform is singular");

  const PolyMatrix y = PolyMatrix(s) * lp * t.forward();
  const PolyMatrix w = y.block(0, 0, n1, n1);
  if (y != direct_sum(w, PolyMatrix::identity(e))) throw InvariantViolation("monic_reduce: reduced form is not W (+) I");
  Pencil wp = Pencil::from_poly(w);
  if (!wp.is_monic()) throw InvariantViolation("monic_reduce: W is not monic");
  return MonicOutcome{Side::right, t.forward(), t.inverse(), s, std::move(*s_inv), std::move(wp), e};
}

ShiftOutcome shift_to_invertible(const Pencil& l) {
  const auto a1_inv = inverse(l.a1());
  if (!a1_inv) throw DomainError("shift_to_invertible: pencil is not monic");
  for (long i = 0; i <= static_cast<long>(l.dim()); ++i) {
    const RatMatrix m = l.a0() + Rat(i) * l.a1();
    if (determinant(m).is_zero()) continue;
    return ShiftOutcome{i, Rat(-1) * (m * *a1_inv), Rat(-1) * l.a1()};
  }
  throw InvariantViolation("shift_to_invertible: no invertible shift among d + 1 candidates");
}

CharMinPoly char_min_poly(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("char_min_poly: non-square matrix");
  const std::size_t n = a.rows();
  PolyMatrix xa(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      xa(i, j) = i == j ? UPoly(std::vector<Rat>{-a(i, j), Rat(1)}) : UPoly(-a(i, j));
  UPoly m(1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> ej(n);
    ej[j] = Rat(1);
    m = lcm(m, krylov_annihilator(a, std::move(ej)));
  }
  return CharMinPoly{det(xa), m};
}

std::vector<PrimaryComponent> primary_decompose(const RatMatrix& a) {
  const std::size_t n = a.rows();
  const CharMinPoly cm = char_min_poly(a);
  const IrreducibleFactorization fchi = factor_rational(cm.charpoly);
  const IrreducibleFactorization fmin = factor_rational(cm.minpoly);

  std::vector<PrimaryComponent> comps;
  std::vector<std::vector<Rat>> all;
  for (const auto& fp : fchi.factors) {
    PrimaryComponent c;
    c.f = fp.factor.monic();
    c.d = fp.multiplicity;
    for (const auto& mp : fmin.factors)
      if (mp.factor == fp.factor) c.e = mp.multiplicity;
    if (c.e == 0 || c.e > c.d) throw InvariantViolation("primary_decompose: minimal and characteristic polynomial disagree");
    c.basis = kernel_basis(eval_at(pow(c.f, c.e), a));
    if (c.basis.size() != c.d * static_cast<std::size_t>(c.f.degree()))
      throw InvariantViolation("primary_decompose: component dimension mismatch");
    all.insert(all.end(), c.basis.begin(), c.basis.end());
    comps.push_back(std::move(c));
  }
  if (all.size() != n) throw InvariantViolation("primary_decompose: components do not fill the space");

  const RatMatrix t = RatMatrix::from_columns(n, all);
  const auto t_inv = inverse(t);
  if (!t_inv) throw InvariantViolation("primary_decompose: component bases are dependent");
  const RatMatrix r = *t_inv * a * t;
  std::size_t off = 0;
  for (auto& c : comps) {
    const std::size_t k = c.basis.size();
    c.block = r.block(off, off, k, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = off; j < off + k; ++j)
        if ((i < off || i >= off + k) && !r(i, j).is_zero())
          throw InvariantViolation("primary_decompose: component is not invariant");
    off += k;
  }
  return comps;
}

std::vector<LayerBasis> good_basis(const RatMatrix& b, const UPoly& f, unsigned e) {
  const std::size_t n = b.rows();
  const int k = f.degree();
  if (k < 1) throw DomainError("good_basis: f must have positive degree");
  const RatMatrix fb = eval_at(f, b);
  RatMatrix power = RatMatrix::identity(n);
  SpanTracker lower(n);
  std::vector<LayerBasis> layers;
  for (unsigned j = 1; j <= e; ++j) {
    power = power * fb;
    const auto kernel = kernel_basis(power);
    LayerBasis layer;
    layer.layer = j;
    SpanTracker span = lower;
    for (const auto& u : kernel) {
      if (span.size() == kernel.size()) break;
      if (span.contains(u)) continue;
      std::vector<std::vector<Rat>> set;
      std::vector<Rat> v = u;
      for (int s = 0; s < k; ++s) {
        if (!span.add(v)) throw InvariantViolation("good_basis: cyclic set is dependent");
        set.push_back(v);
        v = b.apply(v);
      }
      layer.cyclic_sets.push_back(std::move(set));
    }
    if (span.size() != kernel.size()) throw InvariantViolation("good_basis: layer does not span the kernel");
    layer.nu = kernel.size() - lower.size();
    if (layer.nu == 0 || layer.nu % static_cast<std::size_t>(k) != 0)
      throw InvariantViolation("good_basis: layer dimension is not a positive multiple of deg f");
    lower = std::move(span);
    layers.push_back(std::move(layer));
  }
  if (lower.size() != n) throw InvariantViolation("good_basis: tower does not reach the whole space");
  return layers;
}

RatMatrix good_basis_matrix(const std::vector<LayerBasis>& layers, std::size_t dim) {
  std::vector<std::vector<Rat>> cols;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it)
    for (const auto& set : it->cyclic_sets) cols.insert(cols.end(), set.begin(), set.end());
  if (cols.size() != dim) throw InvariantViolation("good_basis_matrix: wrong vector count");
  return RatMatrix::from_columns(dim, cols);
}

std::vector<PolyMatrix> peel_factor(const PolyMatrix& x, const std::vector<std::size_t>& block_sizes) {
  const std::size_t n = x.rows();
  std::size_t total = 0;
  for (auto s : block_sizes) total += s;
  if (!x.is_square() || total != n) throw DimensionError("peel_factor: block sizes do not match");

  std::vector<PolyMatrix> atoms;
  std::size_t off = 0;
  for (auto s : block_sizes) {
    for (std::size_t i = off; i < off + s; ++i)
      for (std::size_t j = off + s; j < n; ++j)
        if (!x(i, j).is_zero()) throw InvariantViolation("peel_factor: matrix is not block lower triangular");
    const UPoly dt = det(x.block(off, off, s, s));
    if (!is_irreducible(dt)) throw InvariantViolation("peel_factor: diagonal block determinant is reducible");
    PolyMatrix atom = PolyMatrix::identity(n);
    for (std::size_t i = off; i < n; ++i)
      for (std::size_t j = off; j < off + s; ++j) atom(i, j) = x(i, j);
    atoms.push_back(std::move(atom));
    off += s;
  }
  return atoms;
}

namespace {

struct MonicFactors {
  std::vector<PolyMatrix> atoms;
  std::vector<std::size_t> degrees;
  long shift = 0;
  std::vector<ComponentStructure> components;
};

MonicFactors factor_monic(const Pencil& w) {
  const std::size_t n = w.dim();
  const ShiftOutcome sh = shift_to_invertible(w);
  MonicFactors out;
  out.shift = sh.shift;

  std::vector<std::vector<Rat>> cols;
  std::vector<std::size_t> sizes;
  for (auto& comp : primary_decompose(sh.A)) {
    const std::size_t dim = comp.basis.size();
    const std::size_t k = static_cast<std::size_t>(comp.f.degree());
    auto layers = good_basis(comp.block, comp.f, comp.e);
    const RatMatrix tc = good_basis_matrix(layers, dim);
    const RatMatrix rep = *inverse(tc) * comp.block * tc;
    const RatMatrix cf = companion(comp.f);
    for (std::size_t b = 0; b < dim / k; ++b)
      if (rep.block(b * k, b * k, k, k) != cf) throw InvariantViolation("factor_pencil: diagonal block is not companion(f)");
    const RatMatrix g = RatMatrix::from_columns(n, comp.basis) * tc;
    for (std::size_t j = 0; j < dim; ++j) cols.push_back(g.column(j));
    sizes.insert(sizes.end(), dim / k, k);
    out.components.push_back(ComponentStructure{std::move(comp), std::move(layers), rep});
  }

  const RatMatrix t = RatMatrix::from_columns(n, cols);
  const auto t_inv = inverse(t);
  if (!t_inv) throw InvariantViolation("factor_pencil: good basis is singular");
  PolyMatrix x(*t_inv * sh.A * t);
  for (std::size_t i = 0; i < n; ++i) x(i, i) -= UPoly::x();

  out.atoms = peel_factor(x, sizes);
  out.degrees = sizes;
  for (auto& a : out.atoms) a = a.shift(Rat(-sh.shift));
  out.atoms.front() = PolyMatrix(t) * out.atoms.front();
  out.atoms.back() = out.atoms.back() * PolyMatrix(*t_inv * sh.post);
  return out;
}

}  // namespace

PencilFactorization factor_pencil(const Pencil& l) {
  const PolyMatrix lp = l.to_poly();
  const UPoly d = det(lp);
  if (d.is_zero()) throw SingularInputError();
  if (d.degree() == 0) throw UnitInputError();

  PencilFactorization out;
  const std::size_t n = l.dim();
  if (l.is_monic()) {
    MonicFactors mf = factor_monic(l);
    out.atoms = std::move(mf.atoms);
    out.atom_det_degrees = std::move(mf.degrees);
    out.shift = mf.shift;
    out.components = std::move(mf.components);
    out.right_unit = PolyMatrix::identity(n);
    out.right_unit_inv = PolyMatrix::identity(n);
  } else {
    MonicOutcome mr = monic_reduce(l, Side::right);
    MonicFactors mf = factor_monic(mr.W);
    const PolyMatrix pad = PolyMatrix::identity(mr.padding);
    for (auto& a : mf.atoms) out.atoms.push_back(direct_sum(a, pad));
    out.atoms.front() = PolyMatrix(mr.S_inv) * out.atoms.front();
    out.atom_det_degrees = std::move(mf.degrees);
    out.shift = mf.shift;
    out.monic_padding = mr.padding;
    out.components = std::move(mf.components);
    out.right_unit = std::move(mr.U_inv);
    out.right_unit_inv = std::move(mr.U);
  }

  PolyMatrix prod = out.atoms.front();
  for (std::size_t i = 1; i < out.atoms.size(); ++i) prod = prod * out.atoms[i];
  if (prod * out.right_unit != lp) throw InvariantViolation("factor_pencil: product does not reconstruct L");
  return out;
}

}  // namespace atomfact
