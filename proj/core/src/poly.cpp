#include "atomfact/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "atomfact/error.hpp"

namespace atomfact {

namespace {
const Rat kZero{};
}  // namespace

UPoly::UPoly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return monomial(Rat(1), 1); }

UPoly UPoly::monomial(const Rat& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  UPoly p;
  p.c_ = std::move(v);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& UPoly::lead() const { return c_.empty() ? kZero : c_.back(); }

Rat UPoly::eval(const Rat& a) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * inverse(c_.back());
}

UPoly UPoly::shift(const Rat& a) const {
  if (a.is_zero() || c_.size() <= 1) return *this;
  // Horner in the shifted variable: f(x+a) = (...(c_n (x+a) + c_{n-1})(x+a) ...).
  const UPoly xa(std::vector<Rat>{a, Rat(1)});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= xa;
    acc += UPoly(*it);
  }
  return acc;
}

bool UPoly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_integer(); });
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.add_product(a, b);
  return r;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  *this = *this * o;
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

void UPoly::add_product(const UPoly& b, const UPoly& c) {
  if (b.c_.empty() || c.c_.empty()) return;
  const std::size_t n = b.c_.size() + c.c_.size() - 1;
  if (c_.size() < n) c_.resize(n);
  Rat t;
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    if (b.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.c_.size(); ++j) {
      if (c.c_[j].is_zero()) continue;
      t = b.c_[i];
      t *= c.c_[j];
      c_[i + j] += t;
    }
  }
  trim();
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    Rat mag = abs(a);
    if (!first) os << (a.sign() < 0 ? " - " : " + ");
    else if (a.sign() < 0) os << "-";
    first = false;
    const bool show_coeff = i == 0 || !mag.is_one();
    if (show_coeff) os << mag.str();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& f) { return os << f.str(); }

DivMod divmod(const UPoly& f, const UPoly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.degree() < g.degree()) return {UPoly(), f};
  std::vector<Rat> r = f.coeffs();
  const int dg = g.degree();
  const int dq = f.degree() - dg;
  std::vector<Rat> q(static_cast<std::size_t>(dq) + 1);
  const Rat inv_lead = inverse(g.lead());
  Rat t;
  for (int k = dq; k >= 0; --k) {
    const Rat coef = r[static_cast<std::size_t>(k + dg)] * inv_lead;
    q[static_cast<std::size_t>(k)] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= dg; ++j) {
      t = coef;
      t *= g.coeffs()[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(k + j)] -= t;
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& f, const UPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& f, const UPoly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  UPoly a = f;
  UPoly b = g;
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();  // keeps coefficient growth in check
  }
  return a.monic();
}

UPoly lcm(const UPoly& f, const UPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return exact_div(f * g, gcd(f, g)).monic();
}

UPoly pow(const UPoly& f, unsigned e) {
  UPoly result(Rat(1));
  UPoly base = f;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

UPoly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DomainError("duplicate interpolation abscissa " + points[i].first.str());
  // Newton divided differences.
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  UPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= UPoly(std::vector<Rat>{-points[k].first, Rat(1)});
    result += UPoly(dd[k]);
  }
  return result;
}

ContentSplit primitive_part(const UPoly& f) {
  if (f.is_zero()) return {Rat(0), UPoly()};
  Int den_lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  Int num_gcd = 0;
  std::vector<Int> ints;
  ints.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Int v = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) num_gcd = -num_gcd;
  std::vector<Rat> prim;
  prim.reserve(ints.size());
  for (const auto& v : ints) prim.emplace_back(Int(v / num_gcd));
  return {Rat(num_gcd, den_lcm), UPoly(std::move(prim))};
}

std::uint64_t encoding_size(const UPoly& f) {
  if (f.degree() <= 0) return 0;
  std::uint64_t m = 0;
  for (const auto& c : f.coeffs()) m = std::max(m, encoding_size(c));
  return static_cast<std::uint64_t>(f.degree()) * m;
}

Int mignotte_bound(const UPoly& f) {
  if (f.is_zero()) throw DomainError("Mignotte bound of the zero polynomial");
  if (!f.has_integer_coeffs()) throw DomainError("Mignotte bound needs integer coefficients");
  Int sq = 0;
  for (const auto& c : f.coeffs()) {
    const Int n = c.num();
    sq += n * n;
  }
  // ceil(2^d * sqrt(sq)) = ceil(sqrt(4^d * sq)).
  Int scaled = sq << (2 * static_cast<unsigned long>(f.degree()));
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root < scaled) root += 1;
  return root;
}

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace atomfact
