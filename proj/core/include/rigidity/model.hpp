#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rigidity/curvature.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/scalar.hpp"
#include "rigidity/second_fundamental_form.hpp"

namespace rigidity {

struct PrincipalCurvature {
  Scalar value;
  int multiplicity = 1;

  friend bool operator==(const PrincipalCurvature&, const PrincipalCurvature&) = default;
};

/// Distinct principal curvatures of a hypersurface with their multiplicities.
using PrincipalSpectrum = std::vector<PrincipalCurvature>;

/// Sum of multiplicities. Throws ParameterError on a non-positive multiplicity.
int spectrum_dimension(const PrincipalSpectrum& spectrum);

/// The diagonal hypersurface form diag(lambda_1 x m_1, ...).
SecondFundamentalForm<Scalar> to_form(const PrincipalSpectrum& spectrum);

/// Spectrum of S^m(a) x S^{n-m}(sqrt(1 - a^2)) for a unit normal making the
/// first block -sqrt(1 - a^2)/a (multiplicity m) and the second
/// a/sqrt(1 - a^2) (multiplicity n - m). Requires 0 < a^2 < 1.
PrincipalSpectrum product_spectrum(int n, int m, const Rational& radius_sq);

/// Invariants of a spectrum computed from multiplicity-weighted sums; agrees
/// with gauss_curvatures(to_form(spectrum)) and is exact.
CurvatureSummary summarize_spectrum(const PrincipalSpectrum& spectrum);

/// A catalog entry: a hypersurface given by its principal spectrum, or a
/// higher-codimension model given by its second fundamental form.
struct ModelSubmanifold {
  std::string name;
  std::variant<PrincipalSpectrum, SecondFundamentalForm<Scalar>> geometry;

  int dimension() const;
  int codimension() const;
  int ambient_dimension() const { return dimension() + codimension(); }
  bool is_hypersurface() const { return std::holds_alternative<PrincipalSpectrum>(geometry); }
};

CurvatureSummary summarize(const ModelSubmanifold& model, const KminOptions& options = {});

/// Reduced Euler-Lagrange residual, one entry per normal direction. For a
/// hypersurface spectrum this is the isoparametric extremality residual.
std::vector<Scalar> el_residual(const ModelSubmanifold& model, const Rational& k);

namespace catalog {

/// Totally umbilical sphere: every principal curvature equal to H.
ModelSubmanifold round_sphere(int n, const Scalar& mean_curvature);
/// Minimal Clifford torus S^m(sqrt(m/n)) x S^l(sqrt(l/n)), n = m + l.
ModelSubmanifold clifford(int m, int l);
/// Willmore torus S^m(sqrt(l/n)) x S^l(sqrt(m/n)), n = m + l.
ModelSubmanifold willmore(int m, int l);
/// The k-extremal torus T_{m,k} in S^{n+1}; throws ParameterError naming the
/// violated inequality when it does not exist.
ModelSubmanifold torus(int n, int m, const Rational& k);
/// Minimal Veronese surface in S^4: A_1 = mu [[0,1],[1,0]],
/// A_2 = mu [[1,0],[0,-1]] with mu = 1/sqrt(3), so S = 4/3.
ModelSubmanifold veronese_surface();

/// Parses `sphere:n,H`, `clifford:m,l`, `willmore:m,l`, `torus:n,m,k` or
/// `veronese`. Throws ParameterError for unknown tags or bad parameters.
ModelSubmanifold from_tag(std::string_view tag);

}  // namespace catalog
}  // namespace rigidity
