#pragma once

#include <nlohmann/json.hpp>

#include "dimred/arrangement.hpp"
#include "dimred/estimate.hpp"
#include "dimred/geometry.hpp"
#include "dimred/polymer.hpp"
#include "dimred/verify.hpp"

namespace dimred {

using Json = nlohmann::ordered_json;

/// {"family": "braid", "n": 3, "k": 3, "colors": [..], "radii": [..],
///  "normals": [["1", "-1/2"], ..]}; absent optional keys are omitted.
Json json_of(const ArrangementSpec& spec);
ArrangementSpec arrangement_spec_from_json(const Json& j);

/// {"kind": "cylinder", "D": 3, "length": 1.0}
Json json_of(const AsaShape& shape);
AsaShape asa_shape_from_json(const Json& j);
AsaShape parse_shape(const std::string& kind, int D, double length);

/// {"mean", "stderr", "n_samples", "seed"}; the worker count is reported
/// with the run metadata, not per estimate.
Json json_of(const MCEstimate& e);
Json json_of(const DRReport& r);
Json json_of(const InvarianceReport& r);
Json json_of(const TonksTable& t);
Json json_of(const BalancedWeightReport& r);

}  // namespace dimred
