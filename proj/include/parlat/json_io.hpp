// JSON encodings of the wire formats: space points, relation algebras,
// check reports, grid functions and scale/operator configurations.
#pragma once

#include "parlat/checks.hpp"
#include "parlat/galois.hpp"
#include "parlat/grid.hpp"
#include "parlat/scale.hpp"
#include "parlat/space.hpp"

#include <json.hpp>

namespace parlat {

using Json = nlohmann::json;

// Exponent: {"num": int, "den": int, "dec": "-"|""|"+"} with p = num/den
// and infinity encoded as {"num": 1, "den": 0}.
Json exponent_to_json(const EnrichedExponent& e);
EnrichedExponent exponent_from_json(const Json& j);

// {"variant": "chain"|"square"|"amalgam", "local": {...}, "global": {...}}
Json space_to_json(const SpacePoint& s);
SpacePoint space_from_json(const Json& j);

// {"n": int, "involution": [int], "unit": int, "gamma": [[0|1]]}
Json relation_to_json(const FiniteRelationAlgebra& a);
FiniteRelationAlgebra relation_from_json(const Json& j);

Json galois_report_to_json(const GaloisLawReport& report);
Json tightness_report_to_json(const TightnessReport& report);
Json inequality_report_to_json(const InequalityReport& report);

// {"domain": "unit"|"window", "T": int, "resolution": int,
//  "values": [[re, im], ...]}; values may also be a bare real array.
Json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const Json& j);

// {"n": int, "dim": int, "weights": "linear"|"quadratic"|"exponential"|[..],
//  "cap": double}
HilbertScale scale_from_json(const Json& j);
// {"dim": int, "order": int, "cap"?: double,
//  "matrix": [[re,im]...] (row-major) | "diagonal": [..] | "shift": int}
ScaleOperator operator_from_json(const Json& j, const HilbertScale& scale);

}  // namespace parlat
