#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "rigidity/error.hpp"
#include "rigidity/isoparametric.hpp"
#include "rigidity/model.hpp"
#include "rigidity/pinching.hpp"
#include "rigidity/serialization.hpp"
#include "rigidity/trials.hpp"

namespace rigidity::cli {
namespace {

enum class Format { json, table };

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int to_int(const std::string& text, const char* what) {
  const Rational q = parse_rational(text);
  if (!is_integer(q)) throw ParameterError(std::string(what) + " must be an integer (got " + text + ")");
  return numerator(q).convert_to<int>();
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) throw ParameterError("seed must not be empty");
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw ParameterError("invalid seed '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') throw ParameterError("invalid seed '" + text + "'");
  return v;
}

double parse_tolerance(const std::string& text) {
  std::size_t used = 0;
  double v = -1;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v >= 0)) throw ParameterError("invalid tolerance '" + text + "'");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
    return parse_seed(env);
  }
  return kDefaultSeed;
}

// Table mode: one line per leaf, Scalar objects collapsed to their grammar string.
bool is_scalar_object(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("value") && j.contains("exact") &&
         j.contains("float");
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_scalar_object(j)) {
    std::string v = j["value"].get<std::string>();
    if (j["exact"].get<bool>() && j["value"].get<std::string>().find("sqrt") != std::string::npos) {
      std::ostringstream approx;
      approx.precision(12);
      approx << j["float"].get<double>();
      v += "  (~" + approx.str() + ")";
    }
    rows.emplace_back(path, v);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
    }
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
}

void emit_lines(const std::vector<Json>& docs, Format format, std::ostream& out) {
  if (format == Format::json) {
    for (const auto& d : docs) out << d.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out << '\n';
    emit(docs[i], format, out);
  }
}

PrincipalSpectrum parse_spectrum(const std::string& text) {
  PrincipalSpectrum spectrum;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0) {
      throw ParameterError("spectrum entries must look like value:multiplicity (got '" + item + "')");
    }
    const int mult = to_int(item.substr(colon + 1), "multiplicity");
    if (mult < 1) throw ParameterError("multiplicities must be positive");
    spectrum.push_back({Scalar::parse(item.substr(0, colon)), mult});
  }
  if (spectrum.empty()) throw ParameterError("spectrum must not be empty");
  return spectrum;
}

Json ktori_list(int n, const Rational& k) {
  if (n < 2) throw ParameterError("ktori list needs n >= 2");
  Json doc = Json::object();
  doc["command"] = "ktori list";
  doc["n"] = n;
  doc["k"] = rational_json(k);
  const auto tori = enumerate_tori(n, k);
  doc["count"] = tori.size();
  Json list = Json::array();
  for (const auto& t : tori) {
    Json entry = t;
    const Scalar expected =
        Scalar(n) + Scalar(n * (Rational(n) / (2 * k) - 1)) * t.mean_norm_sq;
    Json check = Json::object();
    check["rho_sq_expected"] = expected;
    check["holds"] = expected == t.rho_sq;
    entry["rho_sq_identity"] = std::move(check);
    entry["extremality_residual"] = extremality_residual(t.spectrum, k);
    list.push_back(std::move(entry));
  }
  doc["tori"] = std::move(list);
  return doc;
}

std::vector<int> parse_mult(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s, "multiplicity"));
  return out;
}

Json iso_classify(int g, const std::vector<int>& mult, const Rational& k) {
  const auto expect = [&](std::size_t count) {
    if (mult.size() != count) {
      throw ParameterError("g = " + std::to_string(g) + " takes " + std::to_string(count) +
                           " multiplicities in --mult");
    }
  };
  Json doc;
  switch (g) {
    case 1: {
      expect(1);
      if (k < 1) throw ParameterError("k-extremality needs k >= 1");
      if (mult[0] < 2) throw ParameterError("g = 1 needs n >= 2");
      Classification c;
      c.kind = Classification::Kind::all_extremal;
      c.g = 1;
      c.multiplicities = mult;
      c.k = k;
      c.notes.push_back("totally umbilical: every member is k-extremal");
      doc = c;
      break;
    }
    case 2: {
      expect(2);
      const int n = mult[0] + mult[1];
      auto q = solve_g2(n, mult[0], k);
      doc = Json::object();
      doc["g"] = 2;
      doc["multiplicities"] = mult;
      doc["k"] = rational_json(k);
      doc["kind"] = q.torus ? "unique" : "none";
      doc["torus"] = q.torus ? Json(*q.torus) : Json(nullptr);
      if (!q.torus) doc["violated"] = q.violated;
      break;
    }
    case 3:
      expect(1);
      doc = solve_g3(mult[0], k);
      break;
    case 4:
      expect(2);
      doc = solve_g4(mult[0], mult[1], k);
      break;
    case 6:
      expect(1);
      doc = solve_g6(mult[0], k);
      break;
    default:
      throw ParameterError("g must be one of 1, 2, 3, 4, 6 (got " + std::to_string(g) + ")");
  }
  Json wrapped = Json::object();
  wrapped["command"] = "iso classify";
  for (auto it = doc.begin(); it != doc.end(); ++it) wrapped[it.key()] = it.value();
  return wrapped;
}

Json iso_residual(const PrincipalSpectrum& spectrum, const Rational& k) {
  Json doc = Json::object();
  doc["command"] = "iso residual";
  doc["n"] = spectrum_dimension(spectrum);
  doc["k"] = rational_json(k);
  doc["spectrum"] = spectrum;
  const Scalar r = extremality_residual(spectrum, k);
  doc["residual"] = r;
  doc["extremal"] = r.is_exact() ? r.is_zero() : std::abs(r.to_double()) <= kSaturationTolerance;
  return doc;
}

Json model_check(const std::string& tag, const Rational& k, const KminOptions& options) {
  const ModelSubmanifold model = catalog::from_tag(tag);
  Json doc = Json::object();
  doc["command"] = "model check";
  doc["model"] = model;
  doc["summary"] = summarize(model, options);
  doc["report"] = verdict(model, k, options);
  return doc;
}

Json bound_entry(const char* name, const std::optional<Scalar>& value, std::vector<std::string> trace) {
  Json e = Json::object();
  e["name"] = name;
  e["value"] = value ? Json(*value) : Json(nullptr);
  e["trace"] = std::move(trace);
  return e;
}

Json bounds(int n, int p, const Rational& k, const Scalar& H, const Scalar& rho) {
  Json doc = Json::object();
  doc["command"] = "bounds";
  Json inputs = Json::object();
  inputs["n"] = n;
  inputs["p"] = p;
  inputs["k"] = rational_json(k);
  inputs["H"] = H;
  inputs["rho"] = rho;
  doc["inputs"] = std::move(inputs);
  Json list = Json::array();
  list.push_back(bound_entry("C1", c1(n, p, H, rho, k),
                             {"p sgn(p-1)/(2(p+1)) + (n-2)/sqrt(n(n-1)) H rho",
                              "+ (1 - (n/2k - 1)(1 - p sgn(p-1)/(2(p+1)))) H^2"}));
  list.push_back(bound_entry("C1_prime", c1_prime(n, H, rho, k),
                             {"n/(2(n+1)) + (n-2)/sqrt(n(n-1)) H rho",
                              "+ (1 - (n/2k - 1)(n+2)/(2(n+1))) H^2"}));
  if (n >= 4) {
    list.push_back(bound_entry("C2", c2(n, H, rho, k),
                               {"(n-2) + (n-2)^2/sqrt(n(n-1)) H rho + n(1 - 1/2k) H^2"}));
  } else {
    list.push_back(bound_entry("C2", std::nullopt, {"not defined for n < 4"}));
  }
  list.push_back(bound_entry("C3", c3(n, p, H, k),
                             {"(n + n(n/2k - 1) H^2)(1 - sgn(p-1)/3)"}));
  doc["bounds"] = std::move(list);
  return doc;
}

Json epsilon_cmd(const EpsilonInputs& inputs) {
  Json doc = Json::object();
  doc["command"] = "epsilon";
  const Json result = epsilon(inputs);
  for (auto it = result.begin(); it != result.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

struct Options {
  std::string format = "json";
  // shared numeric inputs, parsed after CLI11 has matched the command
  std::string n, m, k, g, mult, spectrum, model, p = "1", H = "0", rho = "0";
  std::string variant, H0 = "0", H0_sq, delta0;
  std::string trials, seed, n_max, p_max, tolerance, planes;
};

int handle(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return ExitCode::ok;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::parameter_error;
  } catch (const InvariantViolation& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return ExitCode::invariant_failure;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return ExitCode::invariant_failure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification, pinching bounds and lemma checks for k-extremal submanifolds"};
  app.name("rigidity");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"json", "table"}));

  auto* ktori = app.add_subcommand("ktori", "k-extremal tori T_{m,k}");
  ktori->require_subcommand(1);
  auto* ktori_list_cmd = ktori->add_subcommand("list", "All T_{m,k} in S^{n+1} for one k");
  ktori_list_cmd->add_option("--n", o.n, "Dimension n")->required();
  ktori_list_cmd->add_option("--k", o.k, "k >= 1 (rational, p/q)")->required();

  auto* iso = app.add_subcommand("iso", "Isoparametric hypersurfaces");
  iso->require_subcommand(1);
  auto* classify = iso->add_subcommand("classify", "k-extremal members of one family");
  classify->add_option("--g", o.g, "Number of distinct principal curvatures")->required();
  classify->add_option("--mult", o.mult, "Multiplicities m1[,m2]")->required();
  classify->add_option("--k", o.k, "k >= 1")->required();
  auto* residual = iso->add_subcommand("residual", "Extremality residual of a spectrum");
  residual->add_option("--spectrum", o.spectrum, "value:mult,... (values in the scalar grammar)")
      ->required();
  residual->add_option("--k", o.k, "k >= 1")->required();

  auto* model = app.add_subcommand("model", "Catalog models");
  model->require_subcommand(1);
  auto* check = model->add_subcommand("check", "Curvature summary and pinching verdicts");
  check->add_option("--model", o.model, "sphere:n,H | clifford:m,l | willmore:m,l | torus:n,m,k | veronese")
      ->required();
  check->add_option("--k", o.k, "k >= 1")->required();
  check->add_option("--planes", o.planes, "Random planes for K_min on non-diagonal forms");
  check->add_option("--seed", o.seed, "Seed for sampled planes");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate C1, C1', C2, C3");
  bounds_cmd->add_option("--n", o.n, "Dimension n")->required();
  bounds_cmd->add_option("--p", o.p, "Codimension p");
  bounds_cmd->add_option("--k", o.k, "k >= 1")->required();
  bounds_cmd->add_option("--H", o.H, "Mean curvature H >= 0");
  bounds_cmd->add_option("--rho", o.rho, "rho >= 0");

  auto* eps = app.add_subcommand("epsilon", "Integral pinching thresholds");
  eps->add_option("--variant", o.variant, "sec | sec-n | ricci | scal | scal-lowk")->required();
  eps->add_option("--n", o.n, "Dimension n >= 3")->required();
  eps->add_option("--p", o.p, "Codimension p");
  eps->add_option("--k", o.k, "k >= 1")->required();
  auto* h0 = eps->add_option("--H0", o.H0, "H0 >= 0");
  eps->add_option("--H0-sq", o.H0_sq, "H0^2 (rational), instead of --H0")->excludes(h0);
  eps->add_option("--delta0", o.delta0, "delta0 > 0")->required();

  auto* verify = app.add_subcommand("verify", "Randomized lemma and identity suites");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand("lemmas", "Inequality suites and equality witnesses");
  auto* identities = verify->add_subcommand("identities", "Pointwise tensor identities");
  for (auto* sub : {lemmas, identities}) {
    sub->add_option("--trials", o.trials, "Trials per suite");
    sub->add_option("--seed", o.seed, std::string("Seed (default from ") + kSeedVariable + ")");
    sub->add_option("--n-max", o.n_max, "Largest dimension");
    sub->add_option("--p-max", o.p_max, "Largest codimension");
    sub->add_option("--tolerance", o.tolerance, "Pass tolerance");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ExitCode::parameter_error;
  }

  const Format format = o.format == "table" ? Format::table : Format::json;
  const auto k = [&] { return parse_rational(o.k); };
  const auto seed = [&] { return o.seed.empty() ? default_seed() : parse_seed(o.seed); };

  return handle(
      [&] {
        if (ktori_list_cmd->parsed()) {
          emit(ktori_list(to_int(o.n, "n"), k()), format, out);
        } else if (classify->parsed()) {
          emit(iso_classify(to_int(o.g, "g"), parse_mult(o.mult), k()), format, out);
        } else if (residual->parsed()) {
          emit(iso_residual(parse_spectrum(o.spectrum), k()), format, out);
        } else if (check->parsed()) {
          KminOptions options;
          if (!o.planes.empty()) {
            const int planes = to_int(o.planes, "planes");
            if (planes < 0) throw ParameterError("planes must be >= 0");
            options.sampled_planes = static_cast<std::size_t>(planes);
          }
          if (!o.seed.empty()) options.seed = parse_seed(o.seed);
          emit(model_check(o.model, k(), options), format, out);
        } else if (bounds_cmd->parsed()) {
          emit(bounds(to_int(o.n, "n"), to_int(o.p, "p"), k(), Scalar::parse(o.H), Scalar::parse(o.rho)),
               format, out);
        } else if (eps->parsed()) {
          EpsilonInputs in;
          in.variant = parse_epsilon_variant(o.variant);
          in.n = to_int(o.n, "n");
          in.p = to_int(o.p, "p");
          in.k = k();
          if (!o.H0_sq.empty()) {
            in.H0_sq = parse_rational(o.H0_sq);
          } else {
            const Scalar h0 = Scalar::parse(o.H0);
            if (h0.sign() < 0) throw ParameterError("H0 must be >= 0");
            const Scalar sq = h0 * h0;
            if (!sq.is_rational()) throw ParameterError("H0^2 must be rational; pass --H0-sq");
            in.H0_sq = sq.rational_part();
          }
          in.delta0 = parse_rational(o.delta0);
          emit(epsilon_cmd(in), format, out);
        } else if (lemmas->parsed() || identities->parsed()) {
          const bool lemma_mode = lemmas->parsed();
          TrialConfig config;
          config.trials = lemma_mode ? 10'000 : 1'000;
          config.n_max = lemma_mode ? 6 : 5;
          config.p_max = lemma_mode ? 4 : 3;
          config.tolerance = lemma_mode ? kLemmaTolerance : kIdentityTolerance;
          if (!o.trials.empty()) {
            const int t = to_int(o.trials, "trials");
            if (t < 1) throw ParameterError("trials must be >= 1");
            config.trials = static_cast<std::size_t>(t);
          }
          if (!o.n_max.empty()) config.n_max = to_int(o.n_max, "n-max");
          if (!o.p_max.empty()) config.p_max = to_int(o.p_max, "p-max");
          if (!o.tolerance.empty()) config.tolerance = parse_tolerance(o.tolerance);
          config.seed = seed();
          config.validate();
          std::vector<TrialReport> reports;
          if (lemma_mode) {
            reports = run_lemma_suites(config);
            for (auto& r : run_witness_suites(config)) reports.push_back(std::move(r));
          } else {
            reports = run_identity_suites(config);
          }
          std::vector<Json> docs;
          for (const auto& r : reports) {
            Json d = r;
            d["seed"] = config.seed;
            docs.push_back(std::move(d));
          }
          emit_lines(docs, format, out);
          const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
          if (!all_pass) throw InvariantViolation("at least one suite reported violations");
        }
      },
      err);
}

}  // namespace rigidity::cli
