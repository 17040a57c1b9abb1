#include "rigidity/rational.hpp"

#include <cctype>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_unsigned(std::string_view digits, std::string_view whole) {
  if (!all_digits(digits)) {
    throw ParameterError("malformed rational '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_unsigned(s.substr(0, slash), whole);
    const Integer den = parse_unsigned(s.substr(slash + 1), whole);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParameterError("malformed rational '" + std::string(whole) + "'");
    }
    const Integer ip = int_part.empty() ? Integer(0) : parse_unsigned(int_part, whole);
    const Integer fp = frac_part.empty() ? Integer(0) : parse_unsigned(frac_part, whole);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(parse_unsigned(s, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

double to_double(const Rational& q) { return q.convert_to<double>(); }

SquareFreeParts square_free_decompose(const Integer& n) {
  if (n < 1) throw ParameterError("square-free decomposition needs a positive integer");
  Integer rest = n;
  Integer root = 1;
  Integer squarefree = 1;
  std::uint32_t p = 2;
  for (; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    if (rest % p != 0) continue;
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) root *= p;
    if (exponent % 2 == 1) squarefree *= p;
  }
  if (rest > 1) {
    if (Integer(p) * p > rest) {
      squarefree *= rest;  // no factor below sqrt(rest): prime
    } else {
      const Integer s = boost::multiprecision::sqrt(rest);
      if (s * s != rest) {
        throw ParameterError("cannot certify square-free part of " + n.str() +
                             " by trial division up to 10^6");
      }
      root *= s;
    }
  }
  return {root, squarefree};
}

}  // namespace rigidity
