#pragma once

#include <nlohmann/json.hpp>

#include "rigidity/curvature.hpp"
#include "rigidity/isoparametric.hpp"
#include "rigidity/model.hpp"
#include "rigidity/pinching.hpp"
#include "rigidity/scalar.hpp"
#include "rigidity/trials.hpp"

namespace rigidity {

// JSON schema notes:
//  - every Scalar, rational or float quantity is an object
//    {"value": <grammar string>, "exact": bool, "float": <double>};
//  - structural integers (n, m, g, p, multiplicities, counts) are plain ints;
//  - key order is fixed, so parse + dump reproduces the text byte for byte.
using Json = nlohmann::ordered_json;

Json float_json(double x);
Json rational_json(const Rational& q);

void to_json(Json& j, const Scalar& x);
void from_json(const Json& j, Scalar& x);

void to_json(Json& j, const PrincipalCurvature& pc);
void to_json(Json& j, const CurvatureSummary& s);
void to_json(Json& j, const ModelSubmanifold& m);
void to_json(Json& j, const TorusSolution& t);
void to_json(Json& j, const IsoSpectrum& s);
void to_json(Json& j, const Classification& c);
void to_json(Json& j, const TheoremVerdict& v);
void to_json(Json& j, const PinchingReport& r);
void to_json(Json& j, const EpsilonResult& r);
void to_json(Json& j, const TrialReport& r);
void to_json(Json& j, const Comparison& c);

}  // namespace rigidity
