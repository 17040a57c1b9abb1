#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/curvature.hpp"
#include "rigidity/model.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/scalar.hpp"

namespace rigidity {

// Pointwise pinching bounds. H and rho are the (non-negative) norms, not
// their squares. The cross term (n-2) H rho / sqrt(n(n-1)) stays exact when
// H rho lies in a single quadratic field.

/// Sectional bound C1(n, p, H, rho, k).
Scalar c1(int n, int p, const Scalar& H, const Scalar& rho, const Rational& k);
/// Sectional bound C1'(n, H, rho, k).
Scalar c1_prime(int n, const Scalar& H, const Scalar& rho, const Rational& k);
/// Ricci bound C2(n, H, rho, k); requires n >= 4.
Scalar c2(int n, const Scalar& H, const Scalar& rho, const Rational& k);
/// Scalar-curvature bound C3(n, p, H, k) on rho^2.
Scalar c3(int n, int p, const Scalar& H, const Rational& k);

enum class Status { holds_strictly, saturated, fails, not_applicable };
const char* to_string(Status status);

/// Saturation tolerance for float margins.
inline constexpr double kSaturationTolerance = 1e-10;

/// Classifies a margin (extreme minus bound, oriented so positive means the
/// hypothesis holds with room to spare).
Status classify_margin(const Scalar& margin);

struct TheoremVerdict {
  std::string theorem;     // thm_sec, thm_sec_n, thm_ricci, thm_scal
  std::string hypothesis;  // e.g. "K_min >= C1"
  std::optional<Scalar> extreme;
  std::optional<Scalar> bound;
  std::optional<Scalar> margin;
  Status status = Status::not_applicable;
};

struct PinchingReport {
  std::string model;
  Rational k;
  int n = 0;
  int p = 0;
  Scalar mean_norm_sq;
  Scalar rho_sq;
  Scalar k_min;
  Scalar ricci_min;
  Scalar c1;
  Scalar c1_prime;
  std::optional<Scalar> c2;  // absent for n < 4
  Scalar c3;
  std::vector<TheoremVerdict> verdicts;
  std::vector<Scalar> el_residual;
  std::vector<std::string> flags;

  const TheoremVerdict& verdict(std::string_view theorem) const;
};

/// Evaluates every theorem hypothesis with the model's own H and rho^2.
PinchingReport verdict(const ModelSubmanifold& model, const Rational& k,
                       const KminOptions& options = {});

struct SobolevConstants {
  double A = 0;      // 𝔄(n, t)
  double B = 0;      // 𝔅(n, t)
  double C = 0;      // C(n)
  double omega = 0;  // volume of the unit n-ball
};

/// Constants of the Sobolev inequality; requires n >= 3 and t > 0.
SobolevConstants sobolev_constants(int n, double t);

enum class EpsilonVariant { sec, sec_n, ricci, scal, scal_lowk };
const char* to_string(EpsilonVariant variant);
EpsilonVariant parse_epsilon_variant(std::string_view tag);

struct EpsilonInputs {
  EpsilonVariant variant = EpsilonVariant::sec;
  int n = 3;
  int p = 1;
  Rational k{1};
  Rational H0_sq{0};
  Rational delta0{1};
};

struct EpsilonResult {
  EpsilonInputs inputs;
  Rational kato;         // (2kn - n + 2) / (n k^2)
  Rational coefficient;  // (a+1)n, n, or tau(p), multiplying delta0 and dividing epsilon
  Rational rhs;          // right-hand side of the equation fixing t
  Rational t;
  SobolevConstants constants;
  double epsilon = 0;
  std::vector<std::string> trace;
  std::vector<std::string> notes;
};

/// Solves the variant's equation kato * 𝔅(n, t) * (1 + H0^2) = rhs for t
/// (without the H0 factor for scal-lowk) and returns kato * 𝔄(n, t) / coefficient.
EpsilonResult epsilon(const EpsilonInputs& inputs);

}  // namespace rigidity
