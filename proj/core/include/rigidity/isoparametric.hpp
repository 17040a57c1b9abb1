#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidity/model.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/scalar.hpp"

namespace rigidity {

/// An isoparametric family member in S^{n+1} with g distinct principal
/// curvatures lambda_1 > ... > lambda_g, generated from lambda_1 = cot(theta)
/// through the cotangent-addition ladder lambda_a = cot(theta + (a-1) pi / g).
struct IsoSpectrum {
  int g = 0;
  std::vector<int> multiplicities;
  Scalar lambda1;
  PrincipalSpectrum spectrum;

  int dimension() const { return spectrum_dimension(spectrum); }
};

/// Builds the full spectrum from lambda_1. Exact when lambda_1 lies in
/// Q(sqrt 3) for g in {3, 6}, in Q(sqrt 2) or Q for g = 4, and in any single
/// quadratic field for g = 2.
///
/// Domains: g = 2 needs lambda_1 > 0, g = 3 needs lambda_1 > 1/sqrt(3),
/// g = 4 needs lambda_1 > 1, g = 6 needs lambda_1 > sqrt(3). Multiplicities
/// must have length g with m_1 = m_2 = m_3 for g = 3, m_1 = m_3 and m_2 = m_4
/// for g = 4, and all equal for g = 6.
IsoSpectrum spectrum_from_lambda1(int g, std::span<const int> multiplicities,
                                  const Scalar& lambda1);

/// Left-hand side of the isoparametric k-extremality equation
///   sum_i lambda_i^3 + (n^2 / 2k) H^3 - (n / 2k + 1) H S
/// with nH = sum m_i lambda_i and S = sum m_i lambda_i^2 (H signed).
Scalar extremality_residual(const PrincipalSpectrum& spectrum, const Rational& k);

/// A k-extremal torus T_{m,k} = S^m(a) x S^{n-m}(sqrt(1 - a^2)).
struct TorusSolution {
  int n = 0;
  int m = 0;
  Rational k;
  Rational radius_sq_first;  // a^2
  PrincipalSpectrum spectrum;
  Scalar mean_norm_sq;       // H^2
  Scalar rho_sq;
};

struct TorusQuery {
  std::optional<TorusSolution> torus;
  std::string violated;  // set when `torus` is empty
};

/// g = 2 classifier. Returns a torus exactly when (n, m, k) admits one:
/// k = n/4 needs m = n/2 (then a^2 = 1/2), k > n/4 needs n - 2k < m < 2k,
/// k < n/4 needs 2k < m < n - 2k; then a^2 = (m - 2k)/(n - 4k).
TorusQuery solve_g2(int n, int m, const Rational& k);

/// All admissible m in ascending order (possibly none).
std::vector<TorusSolution> enumerate_tori(int n, const Rational& k);

/// Outcome of a closed-form classification for fixed multiplicities and k.
struct Classification {
  enum class Kind {
    unique,        // exactly the listed spectra are k-extremal
    all_extremal,  // every member of the family is k-extremal
    none,          // no member is k-extremal
  };
  Kind kind = Kind::none;
  int g = 0;
  std::vector<int> multiplicities;
  Rational k;
  std::vector<IsoSpectrum> solutions;
  /// g = 4 only: positive roots x = A^2 of the quartic-in-A equation.
  std::vector<Scalar> roots;
  /// Coefficients (a, b, c) of a x^2 + b x + c for g = 4.
  std::vector<Rational> polynomial;
  std::vector<std::string> notes;
};

/// g = 3 with m in {1, 2, 4, 8}: k = m/2 makes every member extremal,
/// otherwise only lambda = (sqrt 3, 0, -sqrt 3).
Classification solve_g3(int m, const Rational& k);

/// g = 4 with multiplicities (m1, m2, m1, m2): positive roots of
///   (2k - m1) m1 (m1 + 2 m2) x^2 + 4 m1 m2 (m2 - m1) x
///     - 16 (2k - m2) m2 (2 m1 + m2) = 0,
/// each reconstructed through lambda - 1/lambda = sqrt(x), lambda > 1.
/// An identically zero polynomial (m1 = m2 = 2k) means all extremal.
Classification solve_g4(int m1, int m2, const Rational& k);

/// g = 6 with m in {1, 2}: k = m/2 makes every member extremal, otherwise
/// only lambda_1 = 2 + sqrt 3.
Classification solve_g6(int m, const Rational& k);

/// Known-admissible g = 4 multiplicity pairs: (2,2), (4,5), or m1 + m2 + 1
/// divisible by 2^xi(m1 - 1), where xi(l) counts s in [1, l] with
/// s mod 8 in {0, 1, 2, 4}.
bool g4_multiplicities_admissible(int m1, int m2);

const char* to_string(Classification::Kind kind);

}  // namespace rigidity
