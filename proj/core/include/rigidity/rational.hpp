#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rigidity {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses `p`, `p/q`, or a terminating decimal such as `-1.25` exactly.
/// Throws ParameterError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

double to_double(const Rational& q);

/// Square-free decomposition n = root^2 * squarefree for n >= 1.
/// Trial division is bounded by kTrialDivisionLimit; a cofactor that cannot
/// be certified square-free within that bound raises ParameterError.
struct SquareFreeParts {
  Integer root;
  Integer squarefree;
};

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

SquareFreeParts square_free_decompose(const Integer& n);

}  // namespace rigidity
