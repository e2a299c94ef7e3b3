#include "rsyt/numeric.hpp"

#include <cctype>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "not_a_bijection";
    case ErrorKind::NotIncreasing: return "not_increasing";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::NotGeneric: return "not_generic";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidTableau: return "invalid_tableau";
    case ErrorKind::NotRealizable: return "not_realizable";
    case ErrorKind::EmptySlice: return "empty_slice";
    case ErrorKind::FaceMissesHyperplane: return "face_misses_hyperplane";
    case ErrorKind::BadInput: return "bad_input";
    case ErrorKind::UnknownSubcommand: return "unknown_subcommand";
  }
  return "unknown";
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& z) { return z.str(); }

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw Error(ErrorKind::BadInput, "not a rational: '" + std::string(text) + "'");
    return Rational(integer_from(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error(ErrorKind::BadInput, "not a rational: '" + std::string(text) + "'");
  const BigInt d = integer_from(den);
  if (d == 0) throw Error(ErrorKind::BadInput, "zero denominator: '" + std::string(text) + "'");
  return Rational(integer_from(num), d);
}

BigInt parse_bigint(std::string_view text) {
  const std::string_view s = trim(text);
  if (!is_integer_literal(s)) throw Error(ErrorKind::BadInput, "not an integer: '" + std::string(text) + "'");
  return integer_from(s);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) return 0;
  if (BigInt(k) > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt catalan(unsigned n) { return binomial(BigInt(2 * n), n) / (n + 1); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(v)));
  return l;
}

}  // namespace rsyt
