#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rigidity/matrix.hpp"
#include "rigidity/second_fundamental_form.hpp"

namespace rigidity {

/// One side-by-side evaluation of an inequality lhs <= rhs.
struct Comparison {
  double lhs = 0;
  double rhs = 0;
  bool ok = true;

  /// (lhs - rhs) / max(1, |lhs|, |rhs|); positive means the inequality fails.
  double violation() const;
};

inline constexpr double kLemmaTolerance = 1e-9;

/// |sum a_i^3| <= (n-2)/sqrt(n(n-1)) (sum a_i^2)^{3/2}, for sum a_i = 0.
Comparison okumura_check(std::span<const double> a, double tol = kLemmaTolerance);

/// |sum a_i b_i^2| <= sqrt(sum b_i^4 - (sum b_i^2)^2 / n) sqrt(sum a_i^2), for sum a_i = 0.
Comparison chen_cauchy_check(std::span<const double> a, std::span<const double> b,
                             double tol = kLemmaTolerance);

/// sum b_i^4 - B^2/n <= (n-2)^2/(n(n-1)) B^2 with B = sum b_i^2, for sum b_i = 0.
Comparison chen_quartic_check(std::span<const double> b, double tol = kLemmaTolerance);

struct ChenComparisons {
  Comparison cauchy;
  Comparison quartic;
};
ChenComparisons chen_checks(std::span<const double> a, std::span<const double> b,
                            double tol = kLemmaTolerance);

/// sum_{r,s} N([B_r, B_s]) <= (sum_r N(B_r))^2.
Comparison ddvv_check(std::span<const Matrix<double>> b, double tol = kLemmaTolerance);

/// sum_{r,s} N([B_r, B_s]) <= n sum_{r,s} tr(B_r B_s)^2.
Comparison itoh_check(std::span<const Matrix<double>> b, double tol = kLemmaTolerance);

/// sum N([B_r, B_s]) + sum tr(B_r B_s)^2 <= (1 + sgn(p-1)/2) (sum N(B_r))^2.
Comparison lili_check(std::span<const Matrix<double>> b, double tol = kLemmaTolerance);

/// The two-matrix equality frame P [[0,mu],[mu,0]] P^t, P [[mu,0],[0,-mu]] P^t
/// padded with zeros to n x n, followed by p - 2 zero matrices. P is a random
/// orthogonal matrix determined by `seed`. Requires n >= 2 and p >= 2.
std::vector<Matrix<double>> ddvv_equality_witness(int n, int p, double mu, std::uint64_t seed);

/// Random orthogonal n x n matrix from the QR factorization of a matrix with
/// entries uniform in [-1, 1].
Matrix<double> random_orthogonal(int n, std::uint64_t seed);

// Pointwise identities. Each returns residual components that vanish exactly
// in exact arithmetic.

/// sigma_ab - sigma~_ab - n H^a H^b, for all (a, b).
template <class T>
std::vector<T> sigma1_residual(const SecondFundamentalForm<T>& h) {
  const auto inv = invariants(h);
  const T n(h.dimension());
  std::vector<T> out;
  for (int a = 0; a < h.codimension(); ++a) {
    for (int b = 0; b < h.codimension(); ++b) {
      out.push_back(inv.sigma(a, b) - inv.sigma_tilde(a, b) -
                    n * inv.mean_vector[a] * inv.mean_vector[b]);
    }
  }
  return out;
}

/// sum H^a H^b sigma_ab - sum H^a H^b sigma~_ab - n H^4.
template <class T>
std::vector<T> sigma_residual(const SecondFundamentalForm<T>& h) {
  const auto inv = invariants(h);
  T lhs(0);
  T rhs(0);
  for (int a = 0; a < h.codimension(); ++a) {
    for (int b = 0; b < h.codimension(); ++b) {
      const T w = inv.mean_vector[a] * inv.mean_vector[b];
      lhs += w * inv.sigma(a, b);
      rhs += w * inv.sigma_tilde(a, b);
    }
  }
  rhs += T(h.dimension()) * inv.mean_norm_sq * inv.mean_norm_sq;
  return {lhs - rhs};
}

/// sum H^a tr(A_a A_b^2) - [sum H^a tr(A~_a A~_b^2) + 2 sum H^a H^b sigma~_ab
///                          + H^2 rho^2 + n H^4].
template <class T>
std::vector<T> threeitems_residual(const SecondFundamentalForm<T>& h) {
  const auto inv = invariants(h);
  const auto tilde = traceless(h);
  T lhs(0);
  T rhs(0);
  for (int b = 0; b < h.codimension(); ++b) {
    const Matrix<T> sq = h.shape(b) * h.shape(b);
    const Matrix<T> sq_tilde = tilde.shape(b) * tilde.shape(b);
    for (int a = 0; a < h.codimension(); ++a) {
      lhs += inv.mean_vector[a] * trace_product(h.shape(a), sq);
      rhs += inv.mean_vector[a] * trace_product(tilde.shape(a), sq_tilde);
      rhs += T(2) * inv.mean_vector[a] * inv.mean_vector[b] * inv.sigma_tilde(a, b);
    }
  }
  rhs += inv.mean_norm_sq * inv.rho_sq +
         T(h.dimension()) * inv.mean_norm_sq * inv.mean_norm_sq;
  return {lhs - rhs};
}

/// Full contraction of the Gauss-equation curvature minus n(n-1) + n^2 H^2 - S.
template <class T>
std::vector<T> scalar_residual(const SecondFundamentalForm<T>& h) {
  const auto inv = invariants(h);
  const auto ric = ricci_from_riemann(riemann_tensor(h));
  const T n(h.dimension());
  return {ric.trace() - (n * (n - T(1)) + n * n * inv.mean_norm_sq - inv.squared_norm)};
}

/// sum_{a,b} N([A_a, A_b]) over ordered pairs.
template <class T>
T commutator_norm_sum(std::span<const Matrix<T>> mats) {
  T sum(0);
  for (std::size_t a = 0; a < mats.size(); ++a) {
    for (std::size_t b = 0; b < mats.size(); ++b) sum += frobenius_sq(commutator(mats[a], mats[b]));
  }
  return sum;
}

/// sum h^a_ij h^b_ki R^perp_{b a j k} by direct index contraction.
template <class T>
T normal_contraction(const SecondFundamentalForm<T>& h) {
  const auto perp = normal_curvature(h);
  const std::size_t n = h.dimension();
  const std::size_t p = h.codimension();
  T sum(0);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) sum += h(a, i, j) * h(b, k, i) * perp(b, a, j, k);
        }
      }
    }
  }
  return sum;
}

/// The contraction plus (1/2) sum N([A_a, A_b]), and the same with the
/// traceless operators in the commutator term.
template <class T>
std::vector<T> norm_residual(const SecondFundamentalForm<T>& h) {
  const T lhs = normal_contraction(h);
  const T half(T(1) / T(2));
  const auto tilde = traceless(h);
  return {lhs + half * commutator_norm_sum(h.shape_operators()),
          lhs + half * commutator_norm_sum(tilde.shape_operators())};
}

/// N([A_a, A_b]) - N([A~_a, A~_b]) for all (a, b).
template <class T>
std::vector<T> trace_shift_residual(const SecondFundamentalForm<T>& h) {
  const auto tilde = traceless(h);
  std::vector<T> out;
  for (int a = 0; a < h.codimension(); ++a) {
    for (int b = 0; b < h.codimension(); ++b) {
      out.push_back(frobenius_sq(commutator(h.shape(a), h.shape(b))) -
                    frobenius_sq(commutator(tilde.shape(a), tilde.shape(b))));
    }
  }
  return out;
}

/// sum h^a_ij (h^a_kl R_lijk + h^a_li R_lkjk) minus
///   n(1 + H^2) rho^2 - sum sigma~_ab^2 + n sum H^a tr(A~_a A~_b^2)
///   - (1/2) sum N([A~_a, A~_b]).
template <class T>
std::vector<T> gauss_contraction_residual(const SecondFundamentalForm<T>& h) {
  const auto r = riemann_tensor(h);
  const auto inv = invariants(h);
  const auto tilde = traceless(h);
  const std::size_t n = h.dimension();
  const std::size_t p = h.codimension();
  T lhs(0);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        T inner(0);
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            inner += h(a, k, l) * r(l, i, j, k) + h(a, l, i) * r(l, k, j, k);
          }
        }
        lhs += h(a, i, j) * inner;
      }
    }
  }
  const T nn(static_cast<int>(n));
  T rhs = nn * (T(1) + inv.mean_norm_sq) * inv.rho_sq;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) {
      rhs -= inv.sigma_tilde(a, b) * inv.sigma_tilde(a, b);
      rhs += nn * inv.mean_vector[a] *
             trace_product(tilde.shape(a), tilde.shape(b) * tilde.shape(b));
    }
  }
  rhs -= commutator_norm_sum(tilde.shape_operators()) / T(2);
  return {lhs - rhs};
}

/// Per alpha: [sum_b tr(A_a A_b^2) - sum_b H^b sigma_ab]
///          + [sum h^a_ij R_ij - n(n-1) H^a - (n-1) sum_b H^b sigma_ab],
/// with R_ij contracted from the Gauss-equation curvature. The first bracket
/// equals minus the second.
template <class T>
std::vector<T> einstein_decomposition_residual(const SecondFundamentalForm<T>& h) {
  const auto inv = invariants(h);
  const auto ric = ricci_from_riemann(riemann_tensor(h));
  const T n(h.dimension());
  std::vector<T> out;
  for (int a = 0; a < h.codimension(); ++a) {
    T cubic(0);
    T weighted(0);
    for (int b = 0; b < h.codimension(); ++b) {
      cubic += trace_product(h.shape(a), h.shape(b) * h.shape(b));
      weighted += inv.mean_vector[b] * inv.sigma(a, b);
    }
    const T contracted = trace_product(h.shape(a), ric);
    const T bracket = contracted - n * (n - T(1)) * inv.mean_vector[a] - (n - T(1)) * weighted;
    out.push_back(cubic - weighted + bracket);
  }
  return out;
}

}  // namespace rigidity
