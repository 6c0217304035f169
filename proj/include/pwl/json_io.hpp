#pragma once

#include "pwl/geometry.hpp"
#include "pwl/limits.hpp"

#include <json.hpp>

namespace pwl {

using json = nlohmann::json;

/// Rationals are written as canonical strings, or as doubles when float output is on.
void set_float_output(bool on);
bool float_output();

json to_json(const Q& q);
json to_json(const QVec& v);
json to_json(const Poly& p);
json to_json(const ExpPoly& f);
json to_json(const FourierData& d);
json to_json(const RadicalData& d);
json to_json(const WeylElement& w);
json to_json(const RootSystem& rs);
json to_json(const Polytope& p);
json to_json(const TowerValue& v);

/// Accepts "p/q" strings, integers and decimals.
Q q_from_json(const json& j);
QVec qvec_from_json(const json& j);
/// {"nvars": n, "terms": [{"exp": [...], "coef": "p/q"}]}
Poly poly_from_json(const json& j);
/// {"dim": n, "terms": [{"a": [...], "p": poly}]}
ExpPoly exppoly_from_json(const json& j);
/// {"rank": r, "coeffs": [{"I": [...], "c": "p/q"}]}
FourierData fourier_from_json(const json& j);
/// {"family": "B", "levels": [...], "mult_preset": {"1": 2, "2": 1}}, keys are squared root lengths.
PropagationTower tower_from_json(const json& j);
json tower_to_json(const PropagationTower& t);
/// {"base_level": n, "rule": "generator", "value": {"poly": ...} | {"exppoly": ...} | {"fourier": ...}}
CoherentElement element_from_json(const json& j);

}  // namespace pwl
