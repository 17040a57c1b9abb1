#include "rigidity/serialization.hpp"

#include "rigidity/error.hpp"

namespace rigidity {
namespace {

template <class T>
Json array_of(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(Json(x));
  return out;
}

Json optional_scalar(const std::optional<Scalar>& x) { return x ? Json(*x) : Json(nullptr); }

bool is_minimal(const PrincipalSpectrum& spectrum) {
  Scalar trace;
  for (const auto& [value, mult] : spectrum) trace += Scalar(mult) * value;
  return trace.is_exact() ? trace.is_zero() : std::abs(trace.to_double()) <= kSaturationTolerance;
}

}  // namespace

Json float_json(double x) { return Json(Scalar::approximate(x)); }

Json rational_json(const Rational& q) { return Json(Scalar(q)); }

void to_json(Json& j, const Scalar& x) {
  j = Json::object();
  j["value"] = x.str();
  j["exact"] = x.is_exact();
  j["float"] = x.to_double();
}

void from_json(const Json& j, Scalar& x) {
  if (j.is_string()) {
    x = Scalar::parse(j.get<std::string>());
  } else if (j.is_object() && j.contains("value")) {
    x = Scalar::parse(j.at("value").get<std::string>());
  } else {
    throw ParameterError("expected a scalar string or {\"value\": ...} object");
  }
}

void to_json(Json& j, const PrincipalCurvature& pc) {
  j = Json::object();
  j["value"] = pc.value;
  j["multiplicity"] = pc.multiplicity;
}

void to_json(Json& j, const CurvatureSummary& s) {
  j = Json::object();
  j["dimension"] = s.dimension;
  j["codimension"] = s.codimension;
  j["mean_vector"] = array_of(s.mean_vector);
  j["mean_norm_sq"] = s.mean_norm_sq;
  j["squared_norm"] = s.squared_norm;
  j["rho_sq"] = s.rho_sq;
  j["scalar_curvature"] = s.scalar_curvature;
  j["ricci_min"] = s.ricci_min;
  j["k_min"] = s.k_min;
  j["k_min_sampled"] = s.k_min_sampled;
}

void to_json(Json& j, const ModelSubmanifold& m) {
  j = Json::object();
  j["name"] = m.name;
  j["dimension"] = m.dimension();
  j["codimension"] = m.codimension();
  j["ambient_dimension"] = m.ambient_dimension();
  Json geometry = Json::object();
  if (const auto* spectrum = std::get_if<PrincipalSpectrum>(&m.geometry)) {
    geometry["kind"] = "spectrum";
    geometry["spectrum"] = array_of(*spectrum);
  } else {
    const auto& form = std::get<SecondFundamentalForm<Scalar>>(m.geometry);
    geometry["kind"] = "form";
    Json mats = Json::array();
    for (const auto& a : form.shape_operators()) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(Json(a(i, c)));
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    geometry["shape_operators"] = std::move(mats);
  }
  j["geometry"] = std::move(geometry);
}

void to_json(Json& j, const TorusSolution& t) {
  j = Json::object();
  j["n"] = t.n;
  j["m"] = t.m;
  j["k"] = rational_json(t.k);
  j["radius_sq_first"] = rational_json(t.radius_sq_first);
  j["spectrum"] = array_of(t.spectrum);
  j["mean_norm_sq"] = t.mean_norm_sq;
  j["rho_sq"] = t.rho_sq;
}

void to_json(Json& j, const IsoSpectrum& s) {
  j = Json::object();
  j["g"] = s.g;
  j["multiplicities"] = s.multiplicities;
  j["lambda1"] = s.lambda1;
  j["spectrum"] = array_of(s.spectrum);
  j["minimal"] = is_minimal(s.spectrum);
}

void to_json(Json& j, const Classification& c) {
  j = Json::object();
  j["g"] = c.g;
  j["multiplicities"] = c.multiplicities;
  j["k"] = rational_json(c.k);
  j["kind"] = to_string(c.kind);
  if (!c.polynomial.empty()) {
    Json poly = Json::array();
    for (const auto& q : c.polynomial) poly.push_back(rational_json(q));
    j["polynomial"] = std::move(poly);
    j["roots"] = array_of(c.roots);
  }
  Json solutions = Json::array();
  for (const auto& s : c.solutions) {
    Json entry = s;
    entry["residual"] = extremality_residual(s.spectrum, c.k);
    solutions.push_back(std::move(entry));
  }
  j["solutions"] = std::move(solutions);
  j["notes"] = c.notes;
}

void to_json(Json& j, const TheoremVerdict& v) {
  j = Json::object();
  j["theorem"] = v.theorem;
  j["hypothesis"] = v.hypothesis;
  j["extreme"] = optional_scalar(v.extreme);
  j["bound"] = optional_scalar(v.bound);
  j["margin"] = optional_scalar(v.margin);
  j["status"] = to_string(v.status);
}

void to_json(Json& j, const PinchingReport& r) {
  j = Json::object();
  j["model"] = r.model;
  j["k"] = rational_json(r.k);
  j["n"] = r.n;
  j["p"] = r.p;
  j["mean_norm_sq"] = r.mean_norm_sq;
  Json bounds = Json::object();
  bounds["C1"] = r.c1;
  bounds["C1_prime"] = r.c1_prime;
  bounds["C2"] = optional_scalar(r.c2);
  bounds["C3"] = r.c3;
  j["bounds"] = std::move(bounds);
  Json extremes = Json::object();
  extremes["k_min"] = r.k_min;
  extremes["ricci_min"] = r.ricci_min;
  extremes["rho_sq"] = r.rho_sq;
  j["extremes"] = std::move(extremes);
  j["verdicts"] = array_of(r.verdicts);
  j["el_residual"] = array_of(r.el_residual);
  j["flags"] = r.flags;
}

void to_json(Json& j, const EpsilonResult& r) {
  j = Json::object();
  Json inputs = Json::object();
  inputs["variant"] = to_string(r.inputs.variant);
  inputs["n"] = r.inputs.n;
  inputs["p"] = r.inputs.p;
  inputs["k"] = rational_json(r.inputs.k);
  inputs["H0_sq"] = rational_json(r.inputs.H0_sq);
  inputs["delta0"] = rational_json(r.inputs.delta0);
  j["inputs"] = std::move(inputs);
  j["value"] = float_json(r.epsilon);
  Json d = Json::object();
  d["kato"] = rational_json(r.kato);
  d["coefficient"] = rational_json(r.coefficient);
  d["rhs"] = rational_json(r.rhs);
  d["t"] = rational_json(r.t);
  d["A"] = float_json(r.constants.A);
  d["B"] = float_json(r.constants.B);
  d["C"] = float_json(r.constants.C);
  d["omega"] = float_json(r.constants.omega);
  j["derivation"] = std::move(d);
  j["trace"] = r.trace;
  j["notes"] = r.notes;
}

void to_json(Json& j, const TrialReport& r) {
  j = Json::object();
  j["tag"] = r.tag;
  j["trials"] = r.trials;
  j["violations"] = r.violations;
  j["max_violation"] = float_json(r.max_violation);
  j["tolerance"] = float_json(r.tolerance);
  if (r.exact_mismatches) j["exact_mismatches"] = *r.exact_mismatches;
  j["pass"] = r.pass;
  j["witness"] = r.witness;
}

void to_json(Json& j, const Comparison& c) {
  j = Json::object();
  j["lhs"] = float_json(c.lhs);
  j["rhs"] = float_json(c.rhs);
  j["ok"] = c.ok;
}

}  // namespace rigidity
