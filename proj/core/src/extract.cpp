#include "atomfact/extract.hpp"

#include <algorithm>

#include "atomfact/error.hpp"
#include "atomfact/trivialize.hpp"
#include "atomfact/unifactor.hpp"

namespace atomfact {

namespace {

PolyMatrix product(const std::vector<PolyMatrix>& ms, std::size_t n) {
  PolyMatrix p = PolyMatrix::identity(n);
  for (const auto& m : ms) p = p * m;
  return p;
}

}  // namespace

ExtractionState begin_extraction(const PolyMatrix& m, const HigmanOutcome& h, const PencilFactorization& pf) {
  const std::size_t n = h.P.rows();
  if (pf.atoms.empty()) throw DomainError("begin_extraction: no pencil atoms");
  ExtractionState s;
  s.P = h.P;
  s.remaining = pf.atoms;
  s.det_degrees = pf.atom_det_degrees;
  s.prefix.reserve(pf.atoms.size());
  s.prefix.push_back(PolyMatrix::identity(n));
  for (std::size_t i = 0; i + 1 < pf.atoms.size(); ++i) s.prefix.push_back(s.prefix.back() * pf.atoms[i]);
  s.right = pf.atoms.back() * (pf.right_unit * h.Q);
  s.G = m;
  s.m = m.rows();
  return s;
}

bool bordered_identity_holds(const ExtractionState& s) {
  const std::size_t n = s.P.rows();
  const std::size_t j = s.remaining.size();
  const PolyMatrix lhs = s.P * (s.prefix[j - 1] * s.right.block(0, 0, n, s.m));
  PolyMatrix expect(n, s.m);
  expect.set_block(0, 0, s.G);
  return lhs == expect;
}

PolyMatrix extract_one(ExtractionState& s, Telemetry* telemetry) {
  const std::size_t j = s.remaining.size();
  if (j < 2) throw DomainError("extract_one: fewer than two factors remain");
  const std::size_t n = s.P.rows();
  const std::size_t m = s.m;
  const PolyMatrix& c = s.prefix[j - 1];

  const PolyMatrix x = c.block(m, 0, n - m, n);
  const PolyMatrix z = s.right.block(0, 0, n, m);
  const TrivOutcome t = c.max_degree() <= 1 ? trivialize_linear(x, z) : trivialize_general(x, z);

  const PolyMatrix nz = t.N_inv * z;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (!nz.row_is_zero(i)) order.push_back(i);
  if (order.size() != m)
    throw InvariantViolation("extract_one: trivialized right side has " + std::to_string(order.size()) +
                             " nonzero rows, expected " + std::to_string(m));
  for (std::size_t i = 0; i < n; ++i)
    if (nz.row_is_zero(i)) order.push_back(i);
  const PolyMatrix pi = permutation_matrix(order);
  const PolyMatrix nr = t.N * pi;

  const PolyMatrix cn = c * nr;
  if (!cn.block(m, 0, n - m, m).is_zero()) throw InvariantViolation("extract_one: lower-left block of C*N is nonzero");
  const PolyMatrix c1 = cn.block(0, 0, m, m);
  PolyMatrix d1(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) d1(i, k) = nz(order[i], k);

  const PolyMatrix g_new = s.P.block(0, 0, m, m) * c1;
  if (g_new * d1 != s.G) throw InvariantViolation("extract_one: G != G' * atom");
  const UPoly dd = det(d1);
  if (static_cast<std::size_t>(std::max(dd.degree(), 0)) != s.det_degrees[j - 1])
    throw InvariantViolation("extract_one: trailing block is not a unit");
  if (!is_irreducible(dd)) throw InvariantViolation("extract_one: extracted block is not an atom");

  if (telemetry != nullptr) {
    telemetry->record("extract", encoding_size(t.N));
    telemetry->record("extract", encoding_size(g_new));
  }

  s.right = s.remaining[j - 2] * nr;
  s.remaining.pop_back();
  s.G = g_new;
  s.extracted.push_back(d1);
  if (!bordered_identity_holds(s)) throw InvariantViolation("extract_one: bordered identity fails");
  return d1;
}

AtomFactorization factor_matrix(const PolyMatrix& m, const FactorOptions& options) {
  if (!m.is_square() || m.rows() == 0) throw DimensionError("factor_matrix: input must be square and non-empty");
  const UPoly dm = det(m);
  if (dm.is_zero()) throw SingularInputError();
  if (dm.degree() == 0) throw UnitInputError();
  Telemetry* tel = options.telemetry;
  if (tel) tel->record("input", encoding_size(m));

  const HigmanOutcome h = linearize(m);
  if (tel) {
    tel->record("higman", encoding_size(h.P));
    tel->record("higman", encoding_size(h.L.to_poly()));
    tel->record("higman", encoding_size(h.Q));
  }

  const PencilFactorization pf = factor_pencil(h.L);
  if (tel) {
    for (const auto& a : pf.atoms) tel->record("pencil", encoding_size(a));
    tel->record("pencil", encoding_size(pf.right_unit));
  }

  AtomFactorization out;
  if (pf.atoms.size() == 1) {
    out.atoms.push_back(m);
  } else {
    ExtractionState s = begin_extraction(m, h, pf);
    if (!bordered_identity_holds(s)) throw InvariantViolation("factor_matrix: initial bordered identity fails");
    while (s.remaining.size() >= 2) extract_one(s, tel);
    out.atoms.push_back(s.G);
    out.atoms.insert(out.atoms.end(), s.extracted.rbegin(), s.extracted.rend());
  }

  // Positive leading coefficient of det for every atom but the first; the
  // sign moves into the left neighbour.
  for (std::size_t t = out.atoms.size(); t-- > 1;) {
    if (det(out.atoms[t]).lead().sign() < 0) {
      out.atoms[t].scale_row(0, Rat(-1));
      out.atoms[t - 1].scale_column(0, Rat(-1));
    }
  }

  for (const auto& a : out.atoms) {
    UPoly d = det(a);
    const bool irr = is_irreducible(d);
    if (!irr) throw InvariantViolation("factor_matrix: output factor is not an atom");
    out.certificates.push_back(AtomCertificate{std::move(d), irr});
  }
  if (product(out.atoms, m.rows()) != m) throw InvariantViolation("factor_matrix: product does not reconstruct M");
  if (out.atoms.size() != factor_rational(dm).omega())
    throw InvariantViolation("factor_matrix: atom count differs from the number of irreducible factors of det M");
  if (tel)
    for (const auto& a : out.atoms) tel->record("atoms", encoding_size(a));
  return out;
}

std::string VerificationReport::first_failure() const {
  if (!product_ok) return "product";
  if (!atoms_ok) return "atoms";
  if (!det_ok) return "determinant";
  if (!count_ok) return "count";
  return {};
}

VerificationReport verify_factorization(const PolyMatrix& m, const std::vector<PolyMatrix>& atoms) {
  VerificationReport r;
  const bool square = m.is_square() && m.rows() > 0;
  bool shapes = square && !atoms.empty();
  for (const auto& a : atoms)
    if (a.rows() != m.rows() || a.cols() != m.cols()) shapes = false;

  if (shapes) r.product_ok = product(atoms, m.rows()) == m;
  if (!r.product_ok) r.detail = "product of atoms differs from the input";

  r.atoms_ok = !atoms.empty();
  UPoly prod_det(1);
  bool dets_ok = shapes;
  for (std::size_t t = 0; t < atoms.size(); ++t) {
    if (!atoms[t].is_square()) {
      r.atoms_ok = false;
      dets_ok = false;
      continue;
    }
    const UPoly d = det(atoms[t]);
    prod_det *= d;
    if (!is_irreducible(d)) {
      if (r.atoms_ok && r.detail.empty()) r.detail = "atom " + std::to_string(t) + " has reducible or constant determinant";
      r.atoms_ok = false;
    }
  }

  const UPoly dm = square ? det(m) : UPoly();
  r.det_ok = dets_ok && !dm.is_zero() && dm == prod_det;
  if (!dm.is_zero()) {
    r.expected_count = factor_rational(dm).omega();
    r.count_ok = r.expected_count == atoms.size();
  }
  if (r.detail.empty() && !r.det_ok) r.detail = "det(M) differs from the product of atom determinants";
  if (r.detail.empty() && !r.count_ok)
    r.detail = "expected " + std::to_string(r.expected_count) + " atoms, got " + std::to_string(atoms.size());
  return r;
}

}  // namespace atomfact
