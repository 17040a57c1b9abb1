#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigidity/scalar.hpp"
#include "rigidity/second_fundamental_form.hpp"

namespace rigidity {

/// Controls the minimum-sectional-curvature search for forms that are not
/// simultaneously diagonal.
struct KminOptions {
  std::size_t sampled_planes = 10'000;
  std::uint64_t seed = 0x6b6d696eULL;
};

/// Intrinsic curvature data of one second fundamental form.
struct CurvatureSummary {
  int dimension = 0;
  int codimension = 0;
  std::vector<Scalar> mean_vector;  // H^alpha
  Scalar mean_norm_sq;              // H^2
  Scalar squared_norm;              // S
  Scalar rho_sq;                    // S - n H^2
  Scalar scalar_curvature;          // n(n-1) + n^2 H^2 - S
  Scalar ricci_min;                 // smallest eigenvalue of (R_ij)
  Scalar k_min;                     // smallest sectional curvature found
  // True when k_min is only an upper bound from coordinate and random planes.
  bool k_min_sampled = false;
};

/// Exact whenever the data allow it:
///  - k_min is exact for n = 2 and for simultaneously diagonal forms (minimum
///    over principal planes); otherwise it is the minimum over coordinate
///    planes and `options.sampled_planes` random orthonormal 2-planes, flagged.
///  - ricci_min is exact when the Ricci matrix is diagonal, otherwise it comes
///    from a symmetric eigensolver and is an approximation.
CurvatureSummary gauss_curvatures(const SecondFundamentalForm<Scalar>& h,
                                  const KminOptions& options = {});

SecondFundamentalForm<double> to_double(const SecondFundamentalForm<Scalar>& h);

/// Sectional curvature R(u, v, u, v) of the plane spanned by orthonormal u, v.
double sectional_curvature(const RiemannTensor<double>& r, std::span<const double> u,
                           std::span<const double> v);

/// Smallest eigenvalue of a symmetric matrix (float eigensolver).
double min_eigenvalue(const Matrix<double>& symmetric);

}  // namespace rigidity
