#include "rigidity/curvature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "rigidity/random.hpp"

namespace rigidity {
namespace {

// R_ijij = 1 + sum_alpha (h_ii h_jj - h_ij^2), exact.
Scalar coordinate_sectional(const SecondFundamentalForm<Scalar>& h, int i, int j) {
  Scalar k(1);
  for (const auto& a : h.shape_operators()) k += a(i, i) * a(j, j) - a(i, j) * a(i, j);
  return k;
}

void orthonormalize(std::vector<double>& u, std::vector<double>& v) {
  const auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  const double nu = std::sqrt(dot(u, u));
  for (double& x : u) x /= nu;
  const double proj = dot(u, v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
  const double nv = std::sqrt(dot(v, v));
  for (double& x : v) x /= nv;
}

}  // namespace

SecondFundamentalForm<double> to_double(const SecondFundamentalForm<Scalar>& h) {
  std::vector<Matrix<double>> out;
  const std::size_t n = h.dimension();
  for (const auto& a : h.shape_operators()) {
    Matrix<double> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j).to_double();
    }
    out.push_back(std::move(m));
  }
  return SecondFundamentalForm<double>(std::move(out));
}

double sectional_curvature(const RiemannTensor<double>& r, std::span<const double> u,
                           std::span<const double> v) {
  const std::size_t n = r.dimension();
  double k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double uv = u[i] * v[j];
      if (uv == 0) continue;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) k += r(i, j, a, b) * uv * u[a] * v[b];
      }
    }
  }
  return k;
}

double min_eigenvalue(const Matrix<double>& symmetric) {
  const auto n = static_cast<Eigen::Index>(symmetric.rows());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = symmetric(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CurvatureSummary gauss_curvatures(const SecondFundamentalForm<Scalar>& h,
                                  const KminOptions& options) {
  const int n = h.dimension();
  const auto inv = invariants(h);
  CurvatureSummary out;
  out.dimension = n;
  out.codimension = h.codimension();
  out.mean_vector = inv.mean_vector;
  out.mean_norm_sq = inv.mean_norm_sq;
  out.squared_norm = inv.squared_norm;
  out.rho_sq = inv.rho_sq;
  out.scalar_curvature = Scalar(n * (n - 1)) + Scalar(n * n) * inv.mean_norm_sq - inv.squared_norm;

  const Matrix<Scalar> ric = ricci_tensor(h);
  if (ric.is_diagonal()) {
    out.ricci_min = ric(0, 0);
    for (int i = 1; i < n; ++i) out.ricci_min = std::min(out.ricci_min, ric(i, i));
  } else {
    Matrix<double> m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = ric(i, j).to_double();
    }
    out.ricci_min = Scalar::approximate(min_eigenvalue(m));
  }

  if (n == 2 || h.simultaneously_diagonal()) {
    // Principal planes realize the minimum when all shape operators are
    // diagonal; for n = 2 there is only one plane.
    out.k_min = coordinate_sectional(h, 0, 1);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.k_min = std::min(out.k_min, coordinate_sectional(h, i, j));
    }
    return out;
  }

  const auto hd = to_double(h);
  const auto r = riemann_tensor(hd);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) best = std::min(best, r(i, j, i, j));
  }
  std::vector<double> u(n), v(n);
  for (std::size_t s = 0; s < options.sampled_planes; ++s) {
    auto engine = make_engine(options.seed, 0x6b6d, s);
    for (int i = 0; i < n; ++i) u[i] = uniform(engine, -1, 1);
    for (int i = 0; i < n; ++i) v[i] = uniform(engine, -1, 1);
    orthonormalize(u, v);
    best = std::min(best, sectional_curvature(r, u, v));
  }
  out.k_min = Scalar::approximate(best);
  out.k_min_sampled = true;
  return out;
}

}  // namespace rigidity
