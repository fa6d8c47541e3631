#include "atomfact/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "atomfact/error.hpp"

namespace atomfact {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Int parse_int(std::string_view s) {
  if (!is_decimal_integer(s)) throw ParseError("malformed rational literal: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational literal with zero denominator: '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat inverse(const Rat& r) { return Rat(1) / r; }

std::uint64_t encoding_size(const Int& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

std::uint64_t encoding_size(const Rat& r) {
  if (r.is_zero()) return 0;
  return std::max(encoding_size(r.num()), encoding_size(r.den()));
}

}  // namespace atomfact
