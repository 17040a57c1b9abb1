#include "rigidity/isoparametric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rigidity/error.hpp"

namespace rigidity {
namespace {

void require_k(const Rational& k) {
  if (k < 1) throw ParameterError("k-extremality needs k >= 1 (got " + to_string(k) + ")");
}

std::string fmt(const Rational& q) { return to_string(q); }

PrincipalSpectrum zip(std::span<const Scalar> values, std::span<const int> mults) {
  PrincipalSpectrum out;
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({values[i], mults[i]});
  return out;
}

void check_multiplicities(int g, std::span<const int> m) {
  if (static_cast<int>(m.size()) != g) {
    throw ParameterError("g = " + std::to_string(g) + " needs " + std::to_string(g) +
                         " multiplicities, got " + std::to_string(m.size()));
  }
  for (int x : m) {
    if (x < 1) throw ParameterError("multiplicities must be positive");
  }
  const auto all_equal = [&] { return std::all_of(m.begin(), m.end(), [&](int x) { return x == m[0]; }); };
  if ((g == 3 || g == 6) && !all_equal()) {
    throw ParameterError("g = " + std::to_string(g) + " requires all multiplicities equal");
  }
  if (g == 4 && (m[0] != m[2] || m[1] != m[3])) {
    throw ParameterError("g = 4 requires m1 = m3 and m2 = m4");
  }
}

// Exact zero for exact values, otherwise a relative float tolerance.
bool vanishes(const Scalar& residual, double scale) {
  if (residual.is_exact()) return residual.is_zero();
  return std::abs(residual.to_double()) <= 1e-8 * std::max(1.0, scale);
}

void verify_solution(const IsoSpectrum& iso, const Rational& k) {
  const Scalar r = extremality_residual(iso.spectrum, k);
  double scale = 0;
  for (const auto& pc : iso.spectrum) scale = std::max(scale, std::pow(std::abs(pc.value.to_double()), 3));
  if (!vanishes(r, scale * iso.dimension())) {
    throw InvariantViolation("classifier produced a spectrum with nonzero residual " + r.str());
  }
}

}  // namespace

IsoSpectrum spectrum_from_lambda1(int g, std::span<const int> multiplicities,
                                  const Scalar& lambda1) {
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6) {
    throw ParameterError("g must be one of 1, 2, 3, 4, 6 (got " + std::to_string(g) + ")");
  }
  check_multiplicities(g, multiplicities);
  const Scalar one(1);
  const Scalar s3 = sqrt_exact(3);
  std::vector<Scalar> ladder;
  switch (g) {
    case 1:
      ladder = {lambda1};
      break;
    case 2:
      if (lambda1.sign() <= 0) throw ParameterError("g = 2 requires lambda1 > 0");
      ladder = {lambda1, -one / lambda1};
      break;
    case 3:
      if (lambda1 <= sqrt_exact(Rational(1, 3))) {
        throw ParameterError("g = 3 requires lambda1 > 1/sqrt(3)");
      }
      ladder = {lambda1, (lambda1 - s3) / (one + s3 * lambda1), (lambda1 + s3) / (one - s3 * lambda1)};
      break;
    case 4:
      if (lambda1 <= one) throw ParameterError("g = 4 requires lambda1 > 1");
      ladder = {lambda1, (lambda1 - one) / (lambda1 + one), -one / lambda1,
                -(lambda1 + one) / (lambda1 - one)};
      break;
    case 6:
      if (lambda1 <= s3) throw ParameterError("g = 6 requires lambda1 > sqrt(3)");
      ladder = {lambda1,
                (s3 * lambda1 - one) / (s3 + lambda1),
                (lambda1 - s3) / (one + s3 * lambda1),
                -one / lambda1,
                (lambda1 + s3) / (one - s3 * lambda1),
                (s3 * lambda1 + one) / (s3 - lambda1)};
      break;
  }
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i - 1] > ladder[i])) {
      throw InvariantViolation("cotangent ladder is not strictly decreasing");
    }
  }
  IsoSpectrum out;
  out.g = g;
  out.multiplicities.assign(multiplicities.begin(), multiplicities.end());
  out.lambda1 = lambda1;
  out.spectrum = zip(ladder, multiplicities);
  return out;
}

Scalar extremality_residual(const PrincipalSpectrum& spectrum, const Rational& k) {
  require_k(k);
  const int n = spectrum_dimension(spectrum);
  Scalar trace;
  Scalar squares;
  Scalar cubes;
  for (const auto& [value, mult] : spectrum) {
    const Scalar m(mult);
    const Scalar v2 = value * value;
    trace += m * value;
    squares += m * v2;
    cubes += m * v2 * value;
  }
  const Scalar nn(n);
  const Scalar mean = trace / nn;
  const Scalar ratio = nn / Scalar(2 * k);  // n / 2k
  return cubes + nn * ratio * mean * mean * mean - (ratio + Scalar(1)) * mean * squares;
}

TorusQuery solve_g2(int n, int m, const Rational& k) {
  require_k(k);
  if (n < 2) throw ParameterError("torus needs n >= 2");
  TorusQuery out;
  if (m < 1 || m > n - 1) {
    out.violated = "1 <= m <= n-1";
    return out;
  }
  const Rational two_k = 2 * k;
  const Rational quarter_n(n, 4);
  Rational radius_sq;
  if (k == quarter_n) {
    if (2 * m != n) {
      out.violated = "k = n/4 requires m = n/2";
      return out;
    }
    radius_sq = Rational(1, 2);
  } else {
    const Rational lo = k > quarter_n ? Rational(n - two_k) : two_k;
    const Rational hi = k > quarter_n ? two_k : Rational(n - two_k);
    if (!(lo < m && m < hi)) {
      out.violated = std::string(k > quarter_n ? "k > n/4 requires n-2k < m < 2k"
                                               : "k < n/4 requires 2k < m < n-2k") +
                     " (" + fmt(lo) + " < " + std::to_string(m) + " < " + fmt(hi) + " fails)";
      return out;
    }
    radius_sq = (m - two_k) / (n - 4 * k);
  }
  TorusSolution torus;
  torus.n = n;
  torus.m = m;
  torus.k = k;
  torus.radius_sq_first = radius_sq;
  torus.spectrum = product_spectrum(n, m, radius_sq);
  const CurvatureSummary summary = summarize_spectrum(torus.spectrum);
  torus.mean_norm_sq = summary.mean_norm_sq;
  torus.rho_sq = summary.rho_sq;
  if (!extremality_residual(torus.spectrum, k).is_zero()) {
    throw InvariantViolation("torus spectrum is not k-extremal");
  }
  out.torus = std::move(torus);
  return out;
}

std::vector<TorusSolution> enumerate_tori(int n, const Rational& k) {
  std::vector<TorusSolution> out;
  for (int m = 1; m <= n - 1; ++m) {
    if (auto q = solve_g2(n, m, k); q.torus) out.push_back(std::move(*q.torus));
  }
  return out;
}

Classification solve_g3(int m, const Rational& k) {
  require_k(k);
  if (m != 1 && m != 2 && m != 4 && m != 8) {
    throw ParameterError("g = 3 requires m in {1, 2, 4, 8} (got " + std::to_string(m) + ")");
  }
  Classification out;
  out.g = 3;
  out.multiplicities = {m, m, m};
  out.k = k;
  if (2 * k == m) {
    out.kind = Classification::Kind::all_extremal;
    out.notes.push_back("k = m/2 (n = 6k = " + std::to_string(3 * m) +
                        "): the extremality factor vanishes identically");
    return out;
  }
  out.kind = Classification::Kind::unique;
  out.solutions.push_back(spectrum_from_lambda1(3, out.multiplicities, sqrt_exact(3)));
  verify_solution(out.solutions.back(), k);
  return out;
}

Classification solve_g4(int m1, int m2, const Rational& k) {
  require_k(k);
  if (m1 < 1 || m2 < 1) throw ParameterError("g = 4 requires positive multiplicities");
  Classification out;
  out.g = 4;
  out.multiplicities = {m1, m2, m1, m2};
  out.k = k;
  const Rational two_k = 2 * k;
  const Rational a = (two_k - m1) * m1 * (m1 + 2 * m2);
  const Rational b = Rational(4 * m1 * m2 * (m2 - m1));
  const Rational c = -16 * (two_k - m2) * m2 * (2 * m1 + m2);
  out.polynomial = {a, b, c};

  if (!g4_multiplicities_admissible(m1, m2)) {
    out.notes.push_back("multiplicities (" + std::to_string(m1) + "," + std::to_string(m2) +
                        ") are outside the known admissible list for g = 4");
  }
  if (a == 0 && b == 0 && c == 0) {
    out.kind = Classification::Kind::all_extremal;
    out.notes.push_back("m1 = m2 = 2k (k = n/8): the polynomial vanishes identically");
    return out;
  }

  std::vector<Scalar> candidates;
  if (a == 0) {
    if (b != 0) candidates.emplace_back(Rational(-c / b));
  } else {
    const Rational disc = b * b - 4 * a * c;
    if (disc >= 0) {
      const Scalar root = sqrt_exact(disc);
      candidates.push_back((Scalar(-b) + root) / Scalar(2 * a));
      if (disc != 0) candidates.push_back((Scalar(-b) - root) / Scalar(2 * a));
    }
  }
  for (const Scalar& x : candidates) {
    if (x.sign() > 0) out.roots.push_back(x);
  }
  std::sort(out.roots.begin(), out.roots.end());
  for (const Scalar& x : out.roots) {
    // lambda - 1/lambda = A = sqrt(x) with lambda > 1.
    const Scalar lambda = (sqrt(x) + sqrt(x + Scalar(4))) / Scalar(2);
    out.solutions.push_back(spectrum_from_lambda1(4, out.multiplicities, lambda));
    verify_solution(out.solutions.back(), k);
  }
  out.kind = out.roots.empty() ? Classification::Kind::none : Classification::Kind::unique;

  if (m1 != m2) {
    const int lo = std::min(m1, m2);
    const int hi = std::max(m1, m2);
    const bool statement_window = lo <= k && k <= hi;
    const bool polynomial_window = lo <= two_k && two_k <= hi;
    if (statement_window != polynomial_window) {
      std::ostringstream note;
      note << "statement/proof mismatch: k " << (statement_window ? "lies in" : "lies outside")
           << " the stated window m1 <= k <= m2, 2k " << (polynomial_window ? "lies in" : "lies outside")
           << " the polynomial window m1 <= 2k <= m2, and the polynomial has "
           << (out.roots.empty() ? "no positive root" : "a positive root");
      out.notes.push_back(note.str());
    }
  }
  return out;
}

Classification solve_g6(int m, const Rational& k) {
  require_k(k);
  if (m != 1 && m != 2) {
    throw ParameterError("g = 6 requires m in {1, 2} (got " + std::to_string(m) + ")");
  }
  Classification out;
  out.g = 6;
  out.multiplicities = std::vector<int>(6, m);
  out.k = k;
  if (2 * k == m) {
    out.kind = Classification::Kind::all_extremal;
    out.notes.push_back("k = m/2 (n = 12, k = 1): the extremality factor vanishes identically");
    return out;
  }
  out.kind = Classification::Kind::unique;
  out.solutions.push_back(spectrum_from_lambda1(6, out.multiplicities, Scalar(2) + sqrt_exact(3)));
  verify_solution(out.solutions.back(), k);
  return out;
}

bool g4_multiplicities_admissible(int m1, int m2) {
  if ((m1 == 2 && m2 == 2) || (m1 == 4 && m2 == 5)) return true;
  int xi = 0;
  for (int s = 1; s <= m1 - 1; ++s) {
    const int r = s % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++xi;
  }
  Integer modulus = 1;
  for (int i = 0; i < xi; ++i) modulus *= 2;
  return Integer(m1 + m2 + 1) % modulus == 0;
}

const char* to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::unique:
      return "unique";
    case Classification::Kind::all_extremal:
      return "all_extremal";
    case Classification::Kind::none:
      return "none";
  }
  return "none";
}

}  // namespace rigidity
