#include "rigidity/model.hpp"

#include <algorithm>
#include <cctype>

#include "rigidity/error.hpp"
#include "rigidity/isoparametric.hpp"

namespace rigidity {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? text.npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

int parse_int(std::string_view text, std::string_view what) {
  const Rational q = parse_rational(text);
  if (!is_integer(q)) throw ParameterError(std::string(what) + " must be an integer");
  return numerator(q).convert_to<int>();
}

void require_product(int m, int l) {
  if (m < 1 || l < 1) throw ParameterError("product tori need both sphere dimensions >= 1");
}

}  // namespace

int spectrum_dimension(const PrincipalSpectrum& spectrum) {
  int n = 0;
  for (const auto& pc : spectrum) {
    if (pc.multiplicity < 1) throw ParameterError("principal multiplicities must be positive");
    n += pc.multiplicity;
  }
  return n;
}

SecondFundamentalForm<Scalar> to_form(const PrincipalSpectrum& spectrum) {
  std::vector<Scalar> diag;
  for (const auto& pc : spectrum) diag.insert(diag.end(), pc.multiplicity, pc.value);
  return SecondFundamentalForm<Scalar>({Matrix<Scalar>::diagonal(diag)});
}

PrincipalSpectrum product_spectrum(int n, int m, const Rational& radius_sq) {
  if (m < 1 || m > n - 1) throw ParameterError("product needs 1 <= m <= n-1");
  if (radius_sq <= 0 || radius_sq >= 1) throw ParameterError("product radius needs 0 < a^2 < 1");
  const Scalar lambda = -sqrt_exact((1 - radius_sq) / radius_sq);
  const Scalar mu = Scalar(-1) / lambda;
  return {{lambda, m}, {mu, n - m}};
}

CurvatureSummary summarize_spectrum(const PrincipalSpectrum& spectrum) {
  const int n = spectrum_dimension(spectrum);
  if (n < 2) throw ParameterError("hypersurface spectrum needs dimension n >= 2");
  Scalar trace;
  Scalar squares;
  for (const auto& [value, mult] : spectrum) {
    trace += Scalar(mult) * value;
    squares += Scalar(mult) * value * value;
  }
  const Scalar mean = trace / Scalar(n);

  CurvatureSummary out;
  out.dimension = n;
  out.codimension = 1;
  out.mean_vector = {mean};
  out.mean_norm_sq = mean * mean;
  out.squared_norm = squares;
  out.rho_sq = squares - Scalar(n) * out.mean_norm_sq;
  out.scalar_curvature = Scalar(n * (n - 1)) + Scalar(n * n) * out.mean_norm_sq - squares;

  bool first = true;
  for (const auto& [value, mult] : spectrum) {
    const Scalar ric = Scalar(n - 1) + Scalar(n) * mean * value - value * value;
    out.ricci_min = first ? ric : std::min(out.ricci_min, ric);
    first = false;
  }
  first = true;
  const auto take = [&](const Scalar& k) {
    out.k_min = first ? k : std::min(out.k_min, k);
    first = false;
  };
  for (std::size_t a = 0; a < spectrum.size(); ++a) {
    if (spectrum[a].multiplicity >= 2) take(Scalar(1) + spectrum[a].value * spectrum[a].value);
    for (std::size_t b = a + 1; b < spectrum.size(); ++b) {
      take(Scalar(1) + spectrum[a].value * spectrum[b].value);
    }
  }
  return out;
}

int ModelSubmanifold::dimension() const {
  return std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, PrincipalSpectrum>) {
          return spectrum_dimension(g);
        } else {
          return g.dimension();
        }
      },
      geometry);
}

int ModelSubmanifold::codimension() const {
  if (const auto* form = std::get_if<SecondFundamentalForm<Scalar>>(&geometry)) {
    return form->codimension();
  }
  return 1;
}

CurvatureSummary summarize(const ModelSubmanifold& model, const KminOptions& options) {
  if (const auto* spectrum = std::get_if<PrincipalSpectrum>(&model.geometry)) {
    return summarize_spectrum(*spectrum);
  }
  return gauss_curvatures(std::get<SecondFundamentalForm<Scalar>>(model.geometry), options);
}

std::vector<Scalar> el_residual(const ModelSubmanifold& model, const Rational& k) {
  if (const auto* spectrum = std::get_if<PrincipalSpectrum>(&model.geometry)) {
    return {extremality_residual(*spectrum, k)};
  }
  return reduced_el_residual(std::get<SecondFundamentalForm<Scalar>>(model.geometry), Scalar(k));
}

namespace catalog {

ModelSubmanifold round_sphere(int n, const Scalar& mean_curvature) {
  if (n < 2) throw ParameterError("sphere needs dimension n >= 2");
  if (mean_curvature.sign() < 0) throw ParameterError("sphere mean curvature must be >= 0");
  return {"sphere(" + std::to_string(n) + "," + mean_curvature.str() + ")",
          PrincipalSpectrum{{mean_curvature, n}}};
}

ModelSubmanifold clifford(int m, int l) {
  require_product(m, l);
  const int n = m + l;
  return {"clifford(" + std::to_string(m) + "," + std::to_string(l) + ")",
          product_spectrum(n, m, Rational(m, n))};
}

ModelSubmanifold willmore(int m, int l) {
  require_product(m, l);
  const int n = m + l;
  return {"willmore(" + std::to_string(m) + "," + std::to_string(l) + ")",
          product_spectrum(n, m, Rational(l, n))};
}

ModelSubmanifold torus(int n, int m, const Rational& k) {
  auto query = solve_g2(n, m, k);
  if (!query.torus) throw ParameterError("torus T_{m,k} does not exist: " + query.violated);
  return {"torus(" + std::to_string(n) + "," + std::to_string(m) + "," + to_string(k) + ")",
          std::move(query.torus->spectrum)};
}

ModelSubmanifold veronese_surface() {
  const Scalar mu = sqrt_exact(Rational(1, 3));
  Matrix<Scalar> a1(2, 2);
  a1(0, 1) = mu;
  a1(1, 0) = mu;
  Matrix<Scalar> a2(2, 2);
  a2(0, 0) = mu;
  a2(1, 1) = -mu;
  return {"veronese", SecondFundamentalForm<Scalar>({a1, a2})};
}

ModelSubmanifold from_tag(std::string_view tag) {
  const auto colon = tag.find(':');
  std::string name(tag.substr(0, colon));
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const std::vector<std::string_view> args =
      colon == std::string_view::npos ? std::vector<std::string_view>{}
                                      : split(tag.substr(colon + 1), ',');
  const auto expect = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw ParameterError(std::string("model tag usage: ") + usage);
  };
  if (name == "sphere" || name == "round_sphere") {
    expect(2, "sphere:n,H");
    return round_sphere(parse_int(args[0], "n"), Scalar::parse(args[1]));
  }
  if (name == "clifford") {
    expect(2, "clifford:m,l");
    return clifford(parse_int(args[0], "m"), parse_int(args[1], "l"));
  }
  if (name == "willmore") {
    expect(2, "willmore:m,l");
    return willmore(parse_int(args[0], "m"), parse_int(args[1], "l"));
  }
  if (name == "torus") {
    expect(3, "torus:n,m,k");
    return torus(parse_int(args[0], "n"), parse_int(args[1], "m"), parse_rational(args[2]));
  }
  if (name == "veronese" || name == "veronese_surface") {
    expect(0, "veronese");
    return veronese_surface();
  }
  throw ParameterError("unknown model tag '" + name +
                       "' (expected sphere, clifford, willmore, torus, veronese)");
}

}  // namespace catalog
}  // namespace rigidity
