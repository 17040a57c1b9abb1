#include "rigidity/identities.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "rigidity/error.hpp"
#include "rigidity/random.hpp"

namespace rigidity {
namespace {

Comparison compare_sides(double lhs, double rhs, double tol) {
  Comparison c{lhs, rhs, true};
  c.ok = c.violation() <= tol;
  return c;
}

double sum_pow(std::span<const double> x, int power) {
  double s = 0;
  for (double v : x) s += std::pow(v, power);
  return s;
}

struct MatrixSums {
  double commutators = 0;   // sum_{r,s} N([B_r, B_s])
  double norms = 0;         // sum_r N(B_r)
  double trace_squares = 0; // sum_{r,s} tr(B_r B_s)^2
};

MatrixSums matrix_sums(std::span<const Matrix<double>> b) {
  MatrixSums s;
  s.commutators = commutator_norm_sum(b);
  for (std::size_t r = 0; r < b.size(); ++r) {
    s.norms += frobenius_sq(b[r]);
    for (std::size_t q = 0; q < b.size(); ++q) {
      const double t = trace_product(b[r], b[q]);
      s.trace_squares += t * t;
    }
  }
  return s;
}

}  // namespace

double Comparison::violation() const {
  return (lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Comparison okumura_check(std::span<const double> a, double tol) {
  const double n = static_cast<double>(a.size());
  if (a.size() < 2) throw ParameterError("Okumura check needs n >= 2");
  const double lhs = std::abs(sum_pow(a, 3));
  const double rhs = (n - 2) / std::sqrt(n * (n - 1)) * std::pow(sum_pow(a, 2), 1.5);
  return compare_sides(lhs, rhs, tol);
}

Comparison chen_cauchy_check(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size() || a.empty()) throw ParameterError("Chen check needs equal-length vectors");
  const double n = static_cast<double>(a.size());
  double mixed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mixed += a[i] * b[i] * b[i];
  const double b2 = sum_pow(b, 2);
  const double spread = std::max(0.0, sum_pow(b, 4) - b2 * b2 / n);
  return compare_sides(std::abs(mixed), std::sqrt(spread) * std::sqrt(sum_pow(a, 2)), tol);
}

Comparison chen_quartic_check(std::span<const double> b, double tol) {
  if (b.size() < 2) throw ParameterError("Chen check needs n >= 2");
  const double n = static_cast<double>(b.size());
  const double big = sum_pow(b, 2);
  const double lhs = sum_pow(b, 4) - big * big / n;
  const double rhs = (n - 2) * (n - 2) / (n * (n - 1)) * big * big;
  return compare_sides(lhs, rhs, tol);
}

ChenComparisons chen_checks(std::span<const double> a, std::span<const double> b, double tol) {
  return {chen_cauchy_check(a, b, tol), chen_quartic_check(b, tol)};
}

Comparison ddvv_check(std::span<const Matrix<double>> b, double tol) {
  const MatrixSums s = matrix_sums(b);
  return compare_sides(s.commutators, s.norms * s.norms, tol);
}

Comparison itoh_check(std::span<const Matrix<double>> b, double tol) {
  if (b.empty()) throw ParameterError("Itoh check needs p >= 1");
  const MatrixSums s = matrix_sums(b);
  return compare_sides(s.commutators, static_cast<double>(b.front().rows()) * s.trace_squares, tol);
}

Comparison lili_check(std::span<const Matrix<double>> b, double tol) {
  const MatrixSums s = matrix_sums(b);
  const double factor = b.size() > 1 ? 1.5 : 1.0;
  return compare_sides(s.commutators + s.trace_squares, factor * s.norms * s.norms, tol);
}

Matrix<double> random_orthogonal(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("orthogonal matrix needs n >= 1");
  auto engine = make_engine(seed, 0x6f7274, static_cast<std::uint64_t>(n));
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = uniform(engine, -1, 1);
  }
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
  Matrix<double> out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = q(i, j);
  }
  return out;
}

std::vector<Matrix<double>> ddvv_equality_witness(int n, int p, double mu, std::uint64_t seed) {
  if (n < 2) throw ParameterError("DDVV witness needs n >= 2");
  if (p < 2) throw ParameterError("DDVV witness needs p >= 2");
  Matrix<double> e1(n, n);
  e1(0, 1) = mu;
  e1(1, 0) = mu;
  Matrix<double> e2(n, n);
  e2(0, 0) = mu;
  e2(1, 1) = -mu;
  const Matrix<double> rot = random_orthogonal(n, seed);
  const Matrix<double> rot_t = rot.transpose();
  std::vector<Matrix<double>> out(static_cast<std::size_t>(p), Matrix<double>(n, n));
  out[0] = rot * e1 * rot_t;
  out[1] = rot * e2 * rot_t;
  // Remove rounding asymmetry so the matrices pass symmetric-input checks.
  for (int r = 0; r < 2; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double v = 0.5 * (out[r](i, j) + out[r](j, i));
        out[r](i, j) = v;
        out[r](j, i) = v;
      }
    }
  }
  return out;
}

}  // namespace rigidity
