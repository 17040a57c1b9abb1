#include "rigidity/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "rigidity/error.hpp"

namespace rigidity {
namespace {

int sgn_int(int x) { return (x > 0) - (x < 0); }

void check_common(int n, const Scalar& H, const Rational& k) {
  if (n < 2) throw ParameterError("bounds need n >= 2");
  if (H.sign() < 0) throw ParameterError("H must be >= 0");
  if (k < 1) throw ParameterError("bounds need k >= 1");
}

// (n-2) H rho / sqrt(n(n-1)), kept inside one quadratic field when possible.
Scalar cross_term(int n, const Scalar& H, const Scalar& rho) {
  if (rho.sign() < 0) throw ParameterError("rho must be >= 0");
  return Scalar(n - 2) * H * rho * sqrt_exact(Rational(1, n * (n - 1)));
}

Rational half_ratio(int n, const Rational& k) { return Rational(n) / (2 * k); }

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

TheoremVerdict make_verdict(std::string theorem, std::string hypothesis, const Scalar& extreme,
                            const Scalar& bound, bool lower_bound) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.hypothesis = std::move(hypothesis);
  v.extreme = extreme;
  v.bound = bound;
  v.margin = lower_bound ? extreme - bound : bound - extreme;
  v.status = classify_margin(*v.margin);
  return v;
}

}  // namespace

Scalar c1(int n, int p, const Scalar& H, const Scalar& rho, const Rational& k) {
  check_common(n, H, k);
  if (p < 1) throw ParameterError("codimension p must be >= 1");
  const Rational ddvv = Rational(p * sgn_int(p - 1)) / (2 * (p + 1));
  const Rational quad = 1 - (half_ratio(n, k) - 1) * (1 - ddvv);
  return Scalar(ddvv) + cross_term(n, H, rho) + Scalar(quad) * H * H;
}

Scalar c1_prime(int n, const Scalar& H, const Scalar& rho, const Rational& k) {
  check_common(n, H, k);
  const Rational lead(n, 2 * (n + 1));
  const Rational quad = 1 - (half_ratio(n, k) - 1) * Rational(n + 2, 2 * (n + 1));
  return Scalar(lead) + cross_term(n, H, rho) + Scalar(quad) * H * H;
}

Scalar c2(int n, const Scalar& H, const Scalar& rho, const Rational& k) {
  check_common(n, H, k);
  if (n < 4) throw ParameterError("the Ricci bound needs n >= 4");
  const Rational quad = n * (1 - 1 / (2 * k));
  return Scalar(n - 2) + Scalar(n - 2) * cross_term(n, H, rho) + Scalar(quad) * H * H;
}

Scalar c3(int n, int p, const Scalar& H, const Rational& k) {
  check_common(n, H, k);
  if (p < 1) throw ParameterError("codimension p must be >= 1");
  const Rational factor = 1 - Rational(sgn_int(p - 1), 3);
  return (Scalar(n) + Scalar(n * (half_ratio(n, k) - 1)) * H * H) * Scalar(factor);
}

const char* to_string(Status status) {
  switch (status) {
    case Status::holds_strictly:
      return "holds_strictly";
    case Status::saturated:
      return "saturated";
    case Status::fails:
      return "fails";
    case Status::not_applicable:
      return "not_applicable";
  }
  return "not_applicable";
}

Status classify_margin(const Scalar& margin) {
  if (!margin.is_exact() && std::abs(margin.to_double()) <= kSaturationTolerance) {
    return Status::saturated;
  }
  const int s = margin.sign();
  return s > 0 ? Status::holds_strictly : s == 0 ? Status::saturated : Status::fails;
}

const TheoremVerdict& PinchingReport::verdict(std::string_view theorem) const {
  for (const auto& v : verdicts) {
    if (v.theorem == theorem) return v;
  }
  throw ParameterError("no verdict for theorem '" + std::string(theorem) + "'");
}

PinchingReport verdict(const ModelSubmanifold& model, const Rational& k, const KminOptions& options) {
  const CurvatureSummary s = summarize(model, options);
  PinchingReport r;
  r.model = model.name;
  r.k = k;
  r.n = s.dimension;
  r.p = s.codimension;
  r.mean_norm_sq = s.mean_norm_sq;
  r.rho_sq = s.rho_sq;
  r.k_min = s.k_min;
  r.ricci_min = s.ricci_min;

  const Scalar H = sqrt(s.mean_norm_sq);
  const Scalar rho = sqrt(s.rho_sq);
  r.c1 = c1(r.n, r.p, H, rho, k);
  r.c1_prime = c1_prime(r.n, H, rho, k);
  r.c3 = c3(r.n, r.p, H, k);

  r.verdicts.push_back(make_verdict("thm_sec", "K_min >= C1", s.k_min, r.c1, true));
  r.verdicts.push_back(make_verdict("thm_sec_n", "K_min >= C1'", s.k_min, r.c1_prime, true));
  if (r.n >= 4) {
    r.c2 = c2(r.n, H, rho, k);
    r.verdicts.push_back(make_verdict("thm_ricci", "Ric_min >= C2", s.ricci_min, *r.c2, true));
  } else {
    TheoremVerdict v;
    v.theorem = "thm_ricci";
    v.hypothesis = "Ric_min >= C2";
    v.extreme = s.ricci_min;
    r.verdicts.push_back(std::move(v));
    r.flags.push_back("Ricci theorem needs n >= 4");
  }
  r.verdicts.push_back(make_verdict("thm_scal", "rho^2 <= C3", s.rho_sq, r.c3, false));

  r.el_residual = el_residual(model, k);
  const bool extremal = std::all_of(r.el_residual.begin(), r.el_residual.end(), [](const Scalar& x) {
    return x.is_exact() ? x.is_zero() : std::abs(x.to_double()) <= kSaturationTolerance;
  });
  if (!extremal) r.flags.push_back("model is not k-extremal for this k; verdicts only evaluate hypotheses");
  if (s.k_min_sampled) r.flags.push_back("K_min sampled over coordinate and random planes (upper bound)");
  if (!s.ricci_min.is_exact()) r.flags.push_back("Ric_min from a float eigensolver");
  return r;
}

SobolevConstants sobolev_constants(int n, double t) {
  if (n < 3) throw ParameterError("Sobolev constants need n >= 3");
  if (!(t > 0)) throw ParameterError("Sobolev constants need t > 0");
  SobolevConstants c;
  const double nd = n;
  c.omega = std::pow(std::numbers::pi, nd / 2) / std::tgamma(nd / 2 + 1);
  c.C = std::pow(2.0, nd) * std::pow(nd + 1, 1 + 1 / nd) / ((nd - 1) * std::pow(c.omega, 1 / nd));
  const double base = (nd - 2) * (nd - 2) / (4 * (nd - 1) * (nd - 1));
  c.A = base / (1 + t) / (c.C * c.C);
  c.B = base / t;
  return c;
}

const char* to_string(EpsilonVariant variant) {
  switch (variant) {
    case EpsilonVariant::sec:
      return "sec";
    case EpsilonVariant::sec_n:
      return "sec-n";
    case EpsilonVariant::ricci:
      return "ricci";
    case EpsilonVariant::scal:
      return "scal";
    case EpsilonVariant::scal_lowk:
      return "scal-lowk";
  }
  return "sec";
}

EpsilonVariant parse_epsilon_variant(std::string_view tag) {
  for (auto v : {EpsilonVariant::sec, EpsilonVariant::sec_n, EpsilonVariant::ricci,
                 EpsilonVariant::scal, EpsilonVariant::scal_lowk}) {
    if (tag == to_string(v)) return v;
  }
  throw ParameterError("unknown epsilon variant '" + std::string(tag) +
                       "' (expected sec, sec-n, ricci, scal, scal-lowk)");
}

EpsilonResult epsilon(const EpsilonInputs& in) {
  const int n = in.n;
  if (n < 3) throw ParameterError("epsilon needs n >= 3");
  if (in.p < 1) throw ParameterError("codimension p must be >= 1");
  if (in.k < 1) throw ParameterError("epsilon needs k >= 1");
  if (in.H0_sq < 0) throw ParameterError("H0^2 must be >= 0");
  if (in.delta0 <= 0) throw ParameterError("delta0 must be > 0");
  if (in.variant == EpsilonVariant::ricci && n < 4) {
    throw ParameterError("the Ricci variant needs n >= 4");
  }
  if (in.variant == EpsilonVariant::scal_lowk && !(2 * in.k < n)) {
    throw ParameterError("the scal-lowk variant needs k < n/2");
  }

  EpsilonResult r;
  r.inputs = in;
  const int s = sgn_int(in.p - 1);
  r.kato = Rational(2 * in.k * n - n + 2) / (n * in.k * in.k);
  r.trace.push_back("kato = (2kn - n + 2)/(n k^2) = " + to_string(r.kato));

  Rational height = 1 + in.H0_sq;
  Rational a;
  switch (in.variant) {
    case EpsilonVariant::sec:
      a = Rational(in.p * s, in.p + 2);
      r.coefficient = (a + 1) * n;
      r.trace.push_back("a = p sgn(p-1)/(p+2) = " + to_string(a));
      break;
    case EpsilonVariant::sec_n:
      a = Rational(n, n + 2);
      r.coefficient = (a + 1) * n;
      r.trace.push_back("a = n/(n+2) = " + to_string(a));
      break;
    case EpsilonVariant::ricci:
      r.coefficient = n;
      break;
    case EpsilonVariant::scal:
    case EpsilonVariant::scal_lowk:
      r.coefficient = 1 + Rational(s, 2);
      r.trace.push_back("tau(p) = 1 + sgn(p-1)/2 = " + to_string(r.coefficient));
      break;
  }

  if (in.variant == EpsilonVariant::scal_lowk) {
    const Rational cap = Rational(n * n) / (2 * in.k) - n;
    r.rhs = r.coefficient * std::min(cap, in.delta0);
    height = 1;
    r.trace.push_back("rhs = tau(p) min(n^2/2k - n, delta0) = " + to_string(r.rhs));
    r.notes.push_back("scal-lowk threshold does not depend on H0");
    if (in.delta0 > cap) r.notes.push_back("delta0 clamped at n^2/2k - n = " + to_string(cap));
  } else {
    r.rhs = r.coefficient * in.delta0;
    r.trace.push_back("rhs = " + to_string(r.coefficient) + " * delta0 = " + to_string(r.rhs));
  }

  // kato * (n-2)^2 / (4 (n-1)^2 t) * height = rhs
  r.t = r.kato * (n - 2) * (n - 2) * height / (4 * (n - 1) * (n - 1) * r.rhs);
  if (r.t <= 0) throw InvariantViolation("solved t is not positive");
  r.trace.push_back("t = " + to_string(r.t));

  r.constants = sobolev_constants(n, to_double(r.t));
  const double lhs = to_double(r.kato) * r.constants.B * to_double(height);
  const double target = to_double(r.rhs);
  if (std::abs(lhs - target) > 1e-12 * std::abs(target)) {
    throw InvariantViolation("t does not satisfy its defining equation");
  }
  r.epsilon = to_double(r.kato) * r.constants.A / to_double(r.coefficient);
  if (!(r.epsilon > 0)) throw InvariantViolation("epsilon is not positive");
  r.trace.push_back("A(n,t) = " + fmt_double(r.constants.A));
  r.trace.push_back("epsilon = kato * A(n,t) / " + to_string(r.coefficient) + " = " +
                    fmt_double(r.epsilon));
  r.notes.push_back("epsilon has no rho dependence; it is a function of (n, p, k, H0, delta0) only");
  return r;
}

}  // namespace rigidity
