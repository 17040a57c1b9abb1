#include "rigidity/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {
namespace {

bool compatible(const Scalar& a, const Scalar& b) {
  return a.radicand() == 0 || b.radicand() == 0 || a.radicand() == b.radicand();
}

int rational_sign(const Rational& q) { return q.sign(); }

// Sign of q + r*sqrt(d) with d square-free >= 2.
int surd_sign(const Rational& q, const Rational& r, std::int64_t d) {
  const int sq = rational_sign(q);
  const int sr = rational_sign(r);
  if (sr == 0 || d == 0) return sq;
  if (sq == 0) return sr;
  if (sq == sr) return sq;
  // Opposite signs: the larger magnitude wins. Equality would make sqrt(d)
  // rational, which square-freeness rules out.
  const Rational q2 = q * q;
  const Rational r2d = r * r * d;
  return q2 > r2d ? sq : sr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::int64_t to_radicand(const Integer& d) {
  if (d > std::numeric_limits<std::int64_t>::max()) {
    throw ParameterError("radicand " + d.str() + " exceeds 64-bit range");
  }
  return d.convert_to<std::int64_t>();
}

}  // namespace

Scalar Scalar::surd(const Rational& q, const Rational& r, const Integer& d) {
  if (d < 0) throw ParameterError("negative radicand");
  Scalar out(q);
  if (r == 0 || d == 0) return out;
  const SquareFreeParts parts = square_free_decompose(d);
  const Rational coeff = r * Rational(parts.root);
  if (parts.squarefree == 1) {
    out.rational_ += coeff;
    return out;
  }
  out.surd_ = coeff;
  out.radicand_ = to_radicand(parts.squarefree);
  return out;
}

Scalar Scalar::approximate(double value) {
  Scalar out;
  out.exact_ = false;
  out.approx_ = value;
  return out;
}

bool Scalar::is_zero() const {
  if (!exact_) return approx_ == 0.0;
  return rational_ == 0 && surd_ == 0;
}

void Scalar::canonicalize() {
  if (surd_ == 0) radicand_ = 0;
}

double Scalar::to_double() const {
  if (!exact_) return approx_;
  if (radicand_ == 0) return rigidity::to_double(rational_);
  const double root = std::sqrt(static_cast<double>(radicand_));
  if (rational_sign(rational_) * rational_sign(surd_) >= 0) {
    return rigidity::to_double(rational_) + rigidity::to_double(surd_) * root;
  }
  // Opposite signs: evaluate via the conjugate to avoid cancellation.
  const Rational norm = rational_ * rational_ - surd_ * surd_ * radicand_;
  return rigidity::to_double(norm) /
         (rigidity::to_double(rational_) - rigidity::to_double(surd_) * root);
}

int Scalar::sign() const {
  if (!exact_) return (approx_ > 0) - (approx_ < 0);
  return surd_sign(rational_, surd_, radicand_);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.rational_ = -out.rational_;
  out.surd_ = -out.surd_;
  out.approx_ = -out.approx_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (exact_ && rhs.exact_ && compatible(*this, rhs)) {
    rational_ += rhs.rational_;
    surd_ += rhs.surd_;
    radicand_ = std::max(radicand_, rhs.radicand_);
    canonicalize();
    return *this;
  }
  return *this = approximate(to_double() + rhs.to_double());
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (exact_ && rhs.exact_) {
    if (compatible(*this, rhs)) {
      const std::int64_t d = std::max(radicand_, rhs.radicand_);
      const Rational q = rational_ * rhs.rational_ + surd_ * rhs.surd_ * d;
      const Rational r = rational_ * rhs.surd_ + surd_ * rhs.rational_;
      rational_ = q;
      surd_ = r;
      radicand_ = d;
      canonicalize();
      return *this;
    }
    if (rational_ == 0 && rhs.rational_ == 0) {
      return *this = surd(0, surd_ * rhs.surd_, Integer(radicand_) * rhs.radicand_);
    }
  }
  return *this = approximate(to_double() * rhs.to_double());
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw ParameterError("division by zero");
  if (exact_ && rhs.exact_) {
    if (compatible(*this, rhs)) {
      const std::int64_t d = rhs.radicand_;
      const Rational norm = rhs.rational_ * rhs.rational_ - rhs.surd_ * rhs.surd_ * d;
      Scalar conj;
      conj.rational_ = rhs.rational_ / norm;
      conj.surd_ = -rhs.surd_ / norm;
      conj.radicand_ = d;
      conj.canonicalize();
      return *this *= conj;
    }
    if (rational_ == 0 && rhs.rational_ == 0) {
      const Rational coeff = surd_ / (rhs.surd_ * rhs.radicand_);
      return *this = surd(0, coeff, Integer(radicand_) * rhs.radicand_);
    }
  }
  return *this = approximate(to_double() / rhs.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) {
    return a.rational_ == b.rational_ && a.surd_ == b.surd_ && a.radicand_ == b.radicand_;
  }
  return a.to_double() == b.to_double();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int compare(const Scalar& x, const Scalar& y) {
  if (!x.is_exact() || !y.is_exact()) {
    const double a = x.to_double();
    const double b = y.to_double();
    return (a > b) - (a < b);
  }
  if (compatible(x, y)) return (x - y).sign();
  // x - y = A - B with A = (qx - qy) + rx*sqrt(dx) and B = ry*sqrt(dy).
  const Scalar a = Scalar::surd(x.rational_part() - y.rational_part(), x.surd_coeff(),
                                Integer(x.radicand()));
  const int sa = a.sign();
  const int sb = y.surd_coeff().sign();
  if (sa != sb) return sa > sb ? 1 : -1;
  // Same nonzero sign: compare squares. A^2 lies in Q(sqrt(dx)), B^2 is
  // rational, and they cannot coincide because dx != dy.
  const Scalar a2 = a * a;
  const Scalar b2(y.surd_coeff() * y.surd_coeff() * y.radicand());
  return sa * (a2 - b2).sign();
}

int sgn(const Scalar& x) { return x.sign(); }

Scalar sqrt_exact(const Rational& q) {
  if (q < 0) throw ParameterError("square root of negative rational " + to_string(q));
  if (q == 0) return Scalar();
  const SquareFreeParts num = square_free_decompose(numerator(q));
  const SquareFreeParts den = square_free_decompose(denominator(q));
  // sqrt(a/b) = sqrt(a*b)/b with a*b = (ra*rb)^2 * fa*fb, and the product of
  // two square-free numbers splits further by their gcd.
  const Integer g = boost::multiprecision::gcd(num.squarefree, den.squarefree);
  const Integer radicand = (num.squarefree / g) * (den.squarefree / g);
  const Rational coeff = Rational(num.root * den.root * g, denominator(q));
  return Scalar::surd(0, coeff, radicand);
}

Scalar sqrt(const Scalar& x) {
  if (x.sign() < 0) throw ParameterError("square root of negative value " + x.str());
  if (!x.is_exact()) return Scalar::approximate(std::sqrt(x.to_double()));
  if (x.is_rational()) return sqrt_exact(x.rational_part());
  // Look for (u + v*sqrt(d))^2 = q + r*sqrt(d): u^2 + d v^2 = q, 2uv = r.
  const Rational& q = x.rational_part();
  const Rational& r = x.surd_coeff();
  const std::int64_t d = x.radicand();
  if (const auto t = rational_sqrt(q * q - r * r * d)) {
    for (const Rational& u2 : {Rational((q + *t) / 2), Rational((q - *t) / 2)}) {
      const auto u = rational_sqrt(u2);
      if (!u || *u == 0) continue;
      Scalar root = Scalar::surd(*u, r / (2 * *u), Integer(d));
      if (root.sign() < 0) root = -root;
      return root;
    }
  }
  return Scalar::approximate(std::sqrt(x.to_double()));
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

std::string Scalar::str() const {
  if (!exact_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "float:%.17g", approx_);
    return buf;
  }
  if (radicand_ == 0) return to_string(rational_);
  const std::string root = "*sqrt(" + std::to_string(radicand_) + ")";
  if (rational_ == 0) return to_string(surd_) + root;
  const bool negative = surd_ < 0;
  return to_string(rational_) + (negative ? "-" : "+") +
         to_string(negative ? Rational(-surd_) : surd_) + root;
}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto fail = [&]() -> ParameterError {
    return ParameterError("malformed number '" + std::string(s) + "'");
  };
  if (s.rfind("float:", 0) == 0) {
    const std::string digits(trim(s.substr(6)));
    try {
      std::size_t used = 0;
      const double v = std::stod(digits, &used);
      if (used != digits.size()) throw fail();
      return approximate(v);
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  const auto at = s.find("sqrt(");
  if (at == std::string_view::npos) return Scalar(parse_rational(s));
  if (s.back() != ')') throw fail();
  const Rational radicand = parse_rational(s.substr(at + 5, s.size() - at - 6));
  if (!is_integer(radicand) || radicand < 0) throw fail();

  std::string_view prefix = trim(s.substr(0, at));
  if (!prefix.empty() && prefix.back() == '*') prefix = trim(prefix.substr(0, prefix.size() - 1));
  // Split "q+r" / "q-r" at the last sign that is not a leading sign.
  Rational q = 0;
  std::string_view coeff_text = prefix;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      q = parse_rational(prefix.substr(0, i));
      coeff_text = prefix.substr(i);
      break;
    }
  }
  Rational r;
  if (coeff_text.empty() || coeff_text == "+") {
    r = 1;
  } else if (coeff_text == "-") {
    r = -1;
  } else {
    r = parse_rational(coeff_text);
  }
  return surd(q, r, numerator(radicand));
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace rigidity
