#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rigidity/rational.hpp"

namespace rigidity {

/// A real number q + r*sqrt(d) with rational q, r and square-free d >= 2,
/// or an explicitly flagged binary64 approximation.
///
/// Exact values stay exact under +, -, *, / whenever the operands share a
/// radicand (or one of them is rational). Products and quotients of two pure
/// surds with different radicands also stay exact (sqrt(2)*sqrt(3) = sqrt(6)).
/// Every other mixed-radicand combination degrades to an approximate value
/// with is_exact() == false; the degradation is never silent.
///
/// Comparisons between exact values are exact, including across different
/// radicands.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : rational_(value) {}        // NOLINT(google-explicit-constructor)
  Scalar(Rational value) : rational_(std::move(value)) {}  // NOLINT

  /// q + r*sqrt(d) for any positive integer d; square factors of d are
  /// absorbed into r so the stored radicand is square-free.
  static Scalar surd(const Rational& q, const Rational& r, const Integer& d);

  /// Flagged approximation.
  static Scalar approximate(double value);

  bool is_exact() const { return exact_; }
  bool is_rational() const { return exact_ && radicand_ == 0; }
  bool is_zero() const;

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_coeff() const { return surd_; }
  /// 0 when the value is rational (or approximate).
  std::int64_t radicand() const { return radicand_; }

  double to_double() const;

  /// Sign of the real value in {-1, 0, 1}; exact for exact values.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws ParameterError on division by an exact zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Real-value equality. Exact values compare structurally (the form is
  /// canonical); approximations compare by their binary64 value.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Text grammar: `q`, `r*sqrt(d)`, `q+r*sqrt(d)`, `q-r*sqrt(d)` or
  /// `float:<decimal>`; rationals written `p/q`.
  std::string str() const;
  /// Accepts the output grammar plus the shorthands `sqrt(d)`, `-sqrt(d)`,
  /// `2+sqrt(3)` and terminating decimals. Throws ParameterError.
  static Scalar parse(std::string_view text);

 private:
  void canonicalize();

  Rational rational_;
  Rational surd_;
  std::int64_t radicand_ = 0;
  bool exact_ = true;
  double approx_ = 0.0;
};

/// Sign of x - y, exact whenever both are exact.
int compare(const Scalar& x, const Scalar& y);

int sgn(const Scalar& x);

/// Exact square root of a non-negative rational in canonical r*sqrt(d) form.
/// Throws ParameterError for negative input.
Scalar sqrt_exact(const Rational& q);

/// Square root of a non-negative Scalar. Exact for rationals and for perfect
/// squares inside the same quadratic field (sqrt(3+2*sqrt(2)) = 1+sqrt(2));
/// a flagged approximation otherwise.
Scalar sqrt(const Scalar& x);

Scalar abs(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace rigidity
