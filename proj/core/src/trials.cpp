#include "rigidity/trials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "rigidity/error.hpp"
#include "rigidity/random.hpp"

namespace rigidity {
namespace {

constexpr int kDenominator = 64;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_vector(std::span<const double> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + "]";
}

std::string fmt_matrices(std::span<const Matrix<double>> mats) {
  std::string s = "[";
  for (std::size_t r = 0; r < mats.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t i = 0; i < mats[r].rows(); ++i) {
      std::vector<double> row(mats[r].cols());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = mats[r](i, j);
      s += (i ? "," : "") + fmt_vector(row);
    }
    s += "]";
  }
  return s + "]";
}

std::uint64_t stream_id(std::string_view tag) {
  // FNV-1a, stable across platforms.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<double> random_vector(std::mt19937_64& eng, int n, double bound) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(eng, -bound, bound);
  return v;
}

void project_trace_zero(std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

Matrix<double> random_symmetric(std::mt19937_64& eng, int n, double bound) {
  Matrix<double> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = uniform(eng, -bound, bound);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

std::vector<Matrix<double>> random_family(std::mt19937_64& eng, int n, int p, double bound) {
  std::vector<Matrix<double>> out;
  for (int r = 0; r < p; ++r) out.push_back(random_symmetric(eng, n, bound));
  return out;
}

struct Outcome {
  double violation;  // positive means the trial failed by that much
  std::string witness;
};

using Trial = std::function<Outcome(std::mt19937_64&)>;

TrialReport run_suite(std::string_view tag, const TrialConfig& config, double tolerance,
                      const Trial& trial) {
  TrialReport report;
  report.tag = std::string(tag);
  report.trials = config.trials;
  report.tolerance = tolerance;
  double worst = -INFINITY;
  const std::uint64_t stream = stream_id(tag);
  for (std::size_t i = 0; i < config.trials; ++i) {
    auto engine = make_engine(config.seed, stream, i);
    Outcome o = trial(engine);
    if (o.violation > tolerance) ++report.violations;
    if (o.violation > worst) {
      worst = o.violation;
      report.witness = std::move(o.witness);
    }
  }
  report.max_violation = std::max(0.0, worst);
  report.pass = report.violations == 0;
  return report;
}

Outcome from(const Comparison& c, std::string witness) { return {c.violation(), std::move(witness)}; }

Outcome equality(const Comparison& c, std::string witness) {
  return {std::abs(c.lhs - c.rhs), std::move(witness)};
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (n_min < 2 || n_max < n_min) throw ParameterError("need 2 <= n_min <= n_max");
  if (p_max < 1) throw ParameterError("p_max must be >= 1");
  if (entry_bound <= 0) throw ParameterError("entry bound must be positive");
  if (!(tolerance >= 0)) throw ParameterError("tolerance must be >= 0");
}

const std::vector<std::string>& lemma_tags() {
  static const std::vector<std::string> tags{"okumura", "chen-cauchy", "chen-quartic",
                                             "ddvv",    "itoh",        "lili"};
  return tags;
}

const std::vector<std::string>& witness_tags() {
  static const std::vector<std::string> tags{"okumura-equality", "ddvv-equality", "lili-equality"};
  return tags;
}

const std::vector<std::string>& identity_tags() {
  static const std::vector<std::string> tags{"sigma-1", "sigma",     "threeitems", "scalar",
                                             "norm",    "Iitem",     "unfoldrho",  "trace-shift"};
  return tags;
}

TrialReport run_lemma_suite(std::string_view tag, const TrialConfig& config) {
  config.validate();
  const double bound = to_double(config.entry_bound);
  const double tol = config.tolerance;
  const auto dim = [&](std::mt19937_64& e) { return uniform_int(e, config.n_min, config.n_max); };

  if (tag == "okumura") {
    return run_suite(tag, config, tol, [&](std::mt19937_64& e) {
      auto a = random_vector(e, dim(e), bound);
      project_trace_zero(a);
      return from(okumura_check(a, tol), "a=" + fmt_vector(a));
    });
  }
  if (tag == "chen-cauchy") {
    return run_suite(tag, config, tol, [&](std::mt19937_64& e) {
      const int n = dim(e);
      auto a = random_vector(e, n, bound);
      project_trace_zero(a);
      const auto b = random_vector(e, n, bound);
      return from(chen_cauchy_check(a, b, tol), "a=" + fmt_vector(a) + " b=" + fmt_vector(b));
    });
  }
  if (tag == "chen-quartic") {
    return run_suite(tag, config, tol, [&](std::mt19937_64& e) {
      auto b = random_vector(e, dim(e), bound);
      project_trace_zero(b);
      return from(chen_quartic_check(b, tol), "b=" + fmt_vector(b));
    });
  }
  if (tag == "ddvv" || tag == "itoh" || tag == "lili") {
    const int p_min = tag == "ddvv" ? std::min(2, config.p_max) : 1;
    return run_suite(tag, config, tol, [&, p_min](std::mt19937_64& e) {
      const int n = dim(e);
      const int p = uniform_int(e, p_min, config.p_max);
      const auto mats = random_family(e, n, p, bound);
      const Comparison c = tag == "ddvv"   ? ddvv_check(mats, tol)
                           : tag == "itoh" ? itoh_check(mats, tol)
                                           : lili_check(mats, tol);
      return from(c, "B=" + fmt_matrices(mats));
    });
  }
  throw ParameterError("unknown lemma suite '" + std::string(tag) + "'");
}

std::vector<TrialReport> run_lemma_suites(const TrialConfig& config) {
  std::vector<TrialReport> out;
  for (const auto& tag : lemma_tags()) out.push_back(run_lemma_suite(tag, config));
  return out;
}

std::vector<TrialReport> run_witness_suites(const TrialConfig& config) {
  config.validate();
  const double bound = to_double(config.entry_bound);
  const auto dim = [&](std::mt19937_64& e) { return uniform_int(e, config.n_min, config.n_max); };
  std::vector<TrialReport> out;

  out.push_back(run_suite("okumura-equality", config, kWitnessTolerance, [&](std::mt19937_64& e) {
    const int n = dim(e);
    const double c = uniform(e, -bound, bound);
    std::vector<double> a(n, -c);
    a[uniform_int(e, 0, n - 1)] = (n - 1) * c;
    return equality(okumura_check(a), "a=" + fmt_vector(a));
  }));

  const int p_floor = std::max(2, config.p_max);
  const auto witness = [&](std::mt19937_64& e) {
    const int n = dim(e);
    const int p = uniform_int(e, 2, p_floor);
    const double mu = uniform(e, 0, bound);
    return ddvv_equality_witness(n, p, mu, e());
  };
  out.push_back(run_suite("ddvv-equality", config, kWitnessTolerance, [&](std::mt19937_64& e) {
    const auto mats = witness(e);
    return equality(ddvv_check(mats), "B=" + fmt_matrices(mats));
  }));
  out.push_back(run_suite("lili-equality", config, kWitnessTolerance, [&](std::mt19937_64& e) {
    // Alternate the two equality classes: the rotated pair and a single matrix.
    std::vector<Matrix<double>> mats;
    if (e() % 2 == 0) {
      mats = witness(e);
    } else {
      mats.push_back(random_symmetric(e, dim(e), bound));
    }
    return equality(lili_check(mats), "B=" + fmt_matrices(mats));
  }));
  return out;
}

namespace {

SecondFundamentalForm<Rational> random_rational_form(std::mt19937_64& e, int n, int p,
                                                     const Rational& bound) {
  std::vector<Matrix<Rational>> mats;
  for (int r = 0; r < p; ++r) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = bound * Rational(uniform_int(e, -kDenominator, kDenominator), kDenominator);
      }
    }
    mats.push_back((m + m.transpose()) * Rational(1, 2));
  }
  return SecondFundamentalForm<Rational>(std::move(mats));
}

SecondFundamentalForm<double> to_double_form(const SecondFundamentalForm<Rational>& h) {
  std::vector<Matrix<double>> mats;
  for (const auto& a : h.shape_operators()) {
    Matrix<double> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = to_double(a(i, j));
    }
    mats.push_back(std::move(m));
  }
  return SecondFundamentalForm<double>(std::move(mats));
}

template <class T>
std::vector<T> identity_residual(std::size_t which, const SecondFundamentalForm<T>& h) {
  switch (which) {
    case 0:
      return sigma1_residual(h);
    case 1:
      return sigma_residual(h);
    case 2:
      return threeitems_residual(h);
    case 3:
      return scalar_residual(h);
    case 4:
      return norm_residual(h);
    case 5:
      return gauss_contraction_residual(h);
    case 6:
      return einstein_decomposition_residual(h);
    case 7:
      return trace_shift_residual(h);
  }
  throw InvariantViolation("unknown identity index");
}

std::string fmt_form(const SecondFundamentalForm<Rational>& h) {
  std::string s = "h=[";
  for (int a = 0; a < h.codimension(); ++a) {
    s += a ? ",[" : "[";
    for (int i = 0; i < h.dimension(); ++i) {
      s += i ? ",[" : "[";
      for (int j = 0; j < h.dimension(); ++j) s += (j ? "," : "") + to_string(h(a, i, j));
      s += "]";
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

std::vector<TrialReport> run_identity_suites(const TrialConfig& config) {
  config.validate();
  const auto& tags = identity_tags();
  std::vector<TrialReport> out(tags.size());
  std::vector<double> worst(tags.size(), -INFINITY);
  for (std::size_t t = 0; t < tags.size(); ++t) {
    out[t].tag = tags[t];
    out[t].trials = config.trials;
    out[t].tolerance = config.tolerance;
    out[t].exact_mismatches = 0;
  }
  const std::uint64_t stream = stream_id("identities");
  for (std::size_t i = 0; i < config.trials; ++i) {
    auto e = make_engine(config.seed, stream, i);
    const int n = uniform_int(e, config.n_min, config.n_max);
    const int p = uniform_int(e, 1, config.p_max);
    const auto exact = random_rational_form(e, n, p, config.entry_bound);
    const auto approx = to_double_form(exact);
    for (std::size_t t = 0; t < tags.size(); ++t) {
      const auto residual = identity_residual(t, exact);
      const bool zero = std::all_of(residual.begin(), residual.end(),
                                    [](const Rational& r) { return r == 0; });
      double magnitude = 0;
      for (double r : identity_residual(t, approx)) magnitude = std::max(magnitude, std::abs(r));
      if (!zero) ++*out[t].exact_mismatches;
      if (magnitude > config.tolerance) ++out[t].violations;
      if (magnitude > worst[t] || (!zero && out[t].exact_mismatches == 1u)) {
        worst[t] = std::max(magnitude, worst[t]);
        out[t].witness = fmt_form(exact);
      }
    }
  }
  for (std::size_t t = 0; t < tags.size(); ++t) {
    out[t].max_violation = std::max(0.0, worst[t]);
    out[t].pass = out[t].violations == 0 && *out[t].exact_mismatches == 0;
  }
  return out;
}

}  // namespace rigidity
