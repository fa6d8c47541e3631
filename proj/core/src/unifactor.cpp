#include "atomfact/unifactor.hpp"

#include <algorithm>
#include <random>

#include "atomfact/error.hpp"

namespace atomfact {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x]. p < 2^32 so products of residues fit in 64 bits.

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

Coeffs zp_sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Coeffs zp_mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// Division by a polynomial with invertible leading coefficient.
std::pair<Coeffs, Coeffs> zp_divmod(Coeffs a, const Coeffs& b, std::uint64_t p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  const std::uint64_t inv = invmod(b.back(), p);
  Coeffs q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = mulmod(a[k + b.size() - 1], inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - mulmod(c, b[j], p)) % p;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Coeffs zp_mod(const Coeffs& a, const Coeffs& b, std::uint64_t p) { return zp_divmod(a, b, p).second; }

Coeffs zp_monic(Coeffs a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = invmod(a.back(), p);
  for (auto& x : a) x = mulmod(x, inv, p);
  return a;
}

Coeffs zp_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  while (!b.empty()) {
    Coeffs r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

Coeffs zp_derivative(const Coeffs& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Coeffs d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

// base^e mod m, with e an arbitrary-precision exponent.
Coeffs zp_powmod(const Coeffs& base, const Int& e, const Coeffs& m, std::uint64_t p) {
  Coeffs result{1};
  result = zp_mod(result, m, p);
  Coeffs b = zp_mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = zp_mod(zp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = zp_mod(zp_mul(result, b, p), m, p);
  }
  return result;
}

// s*a + t*b = 1 with deg s < deg b, deg t < deg a, for coprime a, b.
std::pair<Coeffs, Coeffs> zp_bezout(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = zp_divmod(r0, r1, p);
    Coeffs s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    Coeffs t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InvariantViolation("Bezout coefficients requested for non-coprime factors mod p");
  const std::uint64_t inv = invmod(r0[0], p);
  for (auto& x : s0) x = mulmod(x, inv, p);
  for (auto& x : t0) x = mulmod(x, inv, p);
  return {s0, t0};
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Coeffs, int>> distinct_degree(Coeffs f, std::uint64_t p) {
  std::vector<std::pair<Coeffs, int>> out;
  const Coeffs x{0, 1};
  Coeffs h = zp_mod(x, f, p);
  const Int pz(static_cast<unsigned long>(p));
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = zp_powmod(h, pz, f, p);
    Coeffs g = zp_gcd(f, zp_sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = zp_divmod(f, g, p).first;
      h = zp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const Coeffs& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    Coeffs a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Coeffs b = zp_powmod(a, exponent, f, p);
    b = zp_sub(b, Coeffs{1}, p);
    Coeffs g = zp_gcd(f, b, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(zp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z / m)[x].

using IntCoeffs = std::vector<Int>;

void trim(IntCoeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void reduce(IntCoeffs& a, const Int& m) {
  for (auto& x : a) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
}

IntCoeffs im_add(const IntCoeffs& a, const IntCoeffs& b, const Int& m) {
  IntCoeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  reduce(r, m);
  return r;
}

IntCoeffs im_sub(const IntCoeffs& a, const IntCoeffs& b, const Int& m) {
  IntCoeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  reduce(r, m);
  return r;
}

IntCoeffs im_mul(const IntCoeffs& a, const IntCoeffs& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  IntCoeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  reduce(r, m);
  return r;
}

// Division by a monic polynomial mod m.
std::pair<IntCoeffs, IntCoeffs> im_divmod(IntCoeffs a, const IntCoeffs& b, const Int& m) {
  if (b.empty() || b.back() != 1) throw InvariantViolation("modular division needs a monic divisor");
  if (a.size() < b.size()) return {{}, a};
  IntCoeffs q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = a[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  reduce(a, m);
  reduce(q, m);
  return {q, a};
}

IntCoeffs lift_coeffs(const Coeffs& a) {
  IntCoeffs r;
  r.reserve(a.size());
  for (auto x : a) r.emplace_back(static_cast<unsigned long>(x));
  return r;
}

IntCoeffs integer_coeffs(const UPoly& f) {
  IntCoeffs r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (!c.is_integer()) throw DomainError("expected an integer polynomial");
    r.push_back(c.num());
  }
  return r;
}

struct HenselPair {
  IntCoeffs g, h, s, t;
};

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, f and g, h monic.
// Result is valid modulo m2 for any m | m2 | m^2.
HenselPair hensel_step(const IntCoeffs& f, const HenselPair& in, const Int& m2) {
  const IntCoeffs e = im_sub(f, im_mul(in.g, in.h, m2), m2);
  auto [q, r] = im_divmod(im_mul(in.s, e, m2), in.h, m2);
  IntCoeffs g2 = im_add(in.g, im_add(im_mul(in.t, e, m2), im_mul(q, in.g, m2), m2), m2);
  IntCoeffs h2 = im_add(in.h, r, m2);
  IntCoeffs b = im_sub(im_add(im_mul(in.s, g2, m2), im_mul(in.t, h2, m2), m2), IntCoeffs{Int(1)}, m2);
  auto [c, d] = im_divmod(im_mul(in.s, b, m2), h2, m2);
  IntCoeffs s2 = im_sub(in.s, d, m2);
  IntCoeffs t2 = im_sub(in.t, im_add(im_mul(in.t, b, m2), im_mul(c, g2, m2), m2), m2);
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

Int power(std::uint64_t p, unsigned k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

// Lifts a monic target (mod p^k) factored into `factors` mod p.
void lift_tree(const IntCoeffs& target, std::span<const ZpPoly> factors, std::uint64_t p, unsigned k,
               std::vector<ModPoly>& out) {
  const Int pk = power(p, k);
  if (factors.size() == 1) {
    IntCoeffs t = target;
    reduce(t, pk);
    out.push_back({pk, std::move(t)});
    return;
  }
  const std::size_t half = factors.size() / 2;
  Coeffs g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = zp_mul(g0, factors[i].c, p);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = zp_mul(h0, factors[i].c, p);
  auto [s0, t0] = zp_bezout(g0, h0, p);
  HenselPair cur{lift_coeffs(g0), lift_coeffs(h0), lift_coeffs(s0), lift_coeffs(t0)};
  unsigned a = 1;
  while (a < k) {
    const unsigned a2 = std::min(2 * a, k);
    const Int m2 = power(p, a2);
    IntCoeffs f = target;
    reduce(f, m2);
    cur = hensel_step(f, cur, m2);
    a = a2;
  }
  lift_tree(cur.g, factors.subspan(0, half), p, k, out);
  lift_tree(cur.h, factors.subspan(half), p, k, out);
}

// Symmetric representative of a residue mod m.
Int symmetric(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

UPoly to_upoly(const IntCoeffs& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

bool divides_over_z(const UPoly& g, const UPoly& f) {
  // g primitive: divisibility over Q implies an integral quotient.
  if (g.degree() > f.degree()) return false;
  // Cheap necessary conditions on the constant and leading terms.
  const Int f0 = f.coeff(0).num(), g0 = g.coeff(0).num();
  if (g0 == 0 ? f0 != 0 : f0 % g0 != 0) return false;
  if (f.lead().num() % g.lead().num() != 0) return false;
  return divmod(f, g).remainder.is_zero();
}

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<UPoly> factor_squarefree_integer(const UPoly& f) {
  if (f.degree() <= 1) return {f};
  const std::uint64_t p = choose_prime(f);
  const std::vector<ZpPoly> modular = factor_mod_p(f, p);
  if (modular.size() == 1) return {f};

  const Int lc = abs(f.lead()).num();
  const Int bound = 2 * mignotte_bound(f) * lc;
  unsigned k = 1;
  Int pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<ModPoly> lifted = hensel_lift(modular, f, k);

  std::vector<UPoly> found;
  UPoly rest = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    for (;;) {
      // candidate = lc(rest) * prod lifted[idx] mod p^k, symmetric range.
      IntCoeffs prod{rest.lead().num()};
      for (auto i : idx) prod = im_mul(prod, lifted[i].c, pk);
      for (auto& x : prod) x = symmetric(x, pk);
      trim(prod);
      const UPoly candidate = primitive_part(to_upoly(prod)).primitive;
      if (candidate.degree() > 0 && divides_over_z(candidate, rest)) {
        found.push_back(candidate);
        rest = exact_div(rest, candidate);
        for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        progress = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t pos = subset;
      while (pos > 0 && idx[pos - 1] == lifted.size() - subset + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++subset;
  }
  if (rest.degree() > 0) found.push_back(primitive_part(rest).primitive);
  return found;
}

}  // namespace

unsigned IrreducibleFactorization::omega() const {
  unsigned n = 0;
  for (const auto& fp : factors) n += fp.multiplicity;
  return n;
}

UPoly IrreducibleFactorization::expand() const {
  UPoly r(content);
  for (const auto& fp : factors) r *= pow(fp.factor, fp.multiplicity);
  return r;
}

std::vector<FactorPower> squarefree_decompose(const UPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<FactorPower> out;
  if (f.degree() == 0) return out;
  const UPoly a = f.monic();
  const UPoly c = gcd(a, a.derivative());
  UPoly w = exact_div(a, c);
  UPoly y = exact_div(a.derivative(), c);
  UPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    const UPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({primitive_part(g).primitive, i});
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

ZpPoly reduce_mod(const UPoly& f, std::uint64_t p) {
  ZpPoly r{p, {}};
  r.c.reserve(f.coeffs().size());
  const Int pz(static_cast<unsigned long>(p));
  for (const auto& x : f.coeffs()) {
    if (!x.is_integer()) throw DomainError("reduce_mod needs integer coefficients");
    Int v;
    mpz_fdiv_r(v.get_mpz_t(), x.num().get_mpz_t(), pz.get_mpz_t());
    r.c.push_back(v.get_ui());
  }
  trim(r.c);
  return r;
}

std::vector<ZpPoly> factor_mod_p(const UPoly& f, std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 32)) throw DomainError("factor_mod_p needs an odd prime below 2^32");
  const ZpPoly fp = reduce_mod(f, p);
  if (fp.degree() != f.degree()) throw DomainError("prime divides the leading coefficient");
  if (f.degree() < 1) return {};
  const Coeffs monic = zp_monic(fp.c, p);
  if (zp_gcd(monic, zp_derivative(monic, p), p).size() > 1)
    throw DomainError("polynomial is not squarefree modulo the prime");

  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ p);
  std::vector<Coeffs> pieces;
  for (const auto& [g, d] : distinct_degree(monic, p)) equal_degree(g, d, p, rng, pieces);

  std::vector<ZpPoly> out;
  out.reserve(pieces.size());
  for (auto& c : pieces) out.push_back({p, std::move(c)});
  std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return a.c < b.c;
  });
  return out;
}

std::vector<ModPoly> hensel_lift(std::span<const ZpPoly> factors, const UPoly& f, unsigned k) {
  if (factors.empty()) throw InvariantViolation("hensel_lift: no factors");
  if (k == 0) throw DomainError("hensel_lift: exponent must be positive");
  const std::uint64_t p = factors.front().p;
  const Int pk = power(p, k);
  // Make the target monic mod p^k.
  IntCoeffs target = integer_coeffs(f);
  Int lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), target.back().get_mpz_t(), pk.get_mpz_t()) == 0)
    throw DomainError("hensel_lift: leading coefficient not invertible");
  for (auto& x : target) x *= lc_inv;
  reduce(target, pk);

  int total_degree = 0;
  for (const auto& g : factors) {
    if (g.c.empty() || g.c.back() != 1) throw InvariantViolation("hensel_lift: factors must be monic");
    total_degree += g.degree();
  }
  if (total_degree != f.degree()) throw InvariantViolation("hensel_lift: factor degrees do not add up");

  std::vector<ModPoly> out;
  lift_tree(target, factors, p, k, out);
  return out;
}

std::uint64_t choose_prime(const UPoly& f) {
  for (std::uint64_t p = 3;; p += 2) {
    bool prime = true;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    const ZpPoly fp = reduce_mod(f, p);
    if (fp.degree() != f.degree()) continue;
    const Coeffs monic = zp_monic(fp.c, p);
    if (zp_gcd(monic, zp_derivative(monic, p), p).size() > 1) continue;
    return p;
  }
}

IrreducibleFactorization factor_rational(const UPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  const ContentSplit split = primitive_part(f);
  IrreducibleFactorization out{split.content, {}};
  for (const auto& part : squarefree_decompose(split.primitive))
    for (auto& g : factor_squarefree_integer(part.factor)) out.factors.push_back({std::move(g), part.multiplicity});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const auto fact = factor_rational(f);
  return fact.factors.size() == 1 && fact.factors[0].multiplicity == 1;
}

}  // namespace atomfact
