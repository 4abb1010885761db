#include "dimred/io.hpp"

namespace dimred {

namespace {

template <class T>
T required(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw PreconditionError(std::string(what) + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string(what) + ": bad value for '" + key + "': " + e.what());
  }
}

}  // namespace

Json json_of(const ArrangementSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  if (spec.family != Family::widom_rowlinson && spec.family != Family::custom) j["n"] = spec.n;
  if (spec.k) j["k"] = *spec.k;
  if (!spec.colours.empty()) j["colors"] = spec.colours;
  if (!spec.radii.empty()) j["radii"] = spec.radii;
  if (!spec.normals.empty()) j["normals"] = spec.normals;
  return j;
}

ArrangementSpec arrangement_spec_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("arrangement: expected an object");
  ArrangementSpec spec;
  spec.family = parse_family(required<std::string>(j, "family", "arrangement"));
  if (j.contains("n")) spec.n = required<int>(j, "n", "arrangement");
  if (j.contains("k")) spec.k = required<int>(j, "k", "arrangement");
  if (j.contains("colors")) spec.colours = required<std::vector<int>>(j, "colors", "arrangement");
  if (j.contains("radii")) spec.radii = required<std::vector<double>>(j, "radii", "arrangement");
  if (j.contains("normals"))
    spec.normals = required<std::vector<std::vector<std::string>>>(j, "normals", "arrangement");
  return spec;
}

Json json_of(const AsaShape& shape) {
  Json j;
  switch (shape.kind()) {
    case AsaShape::Kind::sphere: j["kind"] = "sphere"; break;
    case AsaShape::Kind::cylinder: j["kind"] = "cylinder"; break;
    case AsaShape::Kind::capped_cylinder: j["kind"] = "capped_cylinder"; break;
  }
  j["D"] = shape.dim();
  if (shape.kind() != AsaShape::Kind::sphere) j["length"] = shape.length();
  return j;
}

AsaShape parse_shape(const std::string& kind, int D, double length) {
  if (kind == "sphere") return AsaShape::sphere(D);
  if (kind == "cylinder") return AsaShape::cylinder(D, length);
  if (kind == "capped_cylinder") return AsaShape::capped_cylinder(D, length);
  throw PreconditionError("unknown ASA shape '" + kind + "' (expected sphere, cylinder or capped_cylinder)");
}

AsaShape asa_shape_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("shape: expected an object");
  const auto kind = required<std::string>(j, "kind", "shape");
  const int D = required<int>(j, "D", "shape");
  const double length = j.contains("length") ? required<double>(j, "length", "shape") : 0.0;
  return parse_shape(kind, D, length);
}

Json json_of(const MCEstimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["stderr"] = e.std_error;
  j["n_samples"] = e.n_samples;
  j["seed"] = e.seed;
  return j;
}

Json json_of(const DRReport& r) {
  Json j;
  j["arrangement"] = r.arrangement;
  j["d"] = r.d;
  j["lhs"] = json_of(r.lhs);
  j["rhs"] = json_of(r.rhs);
  j["z_score"] = r.z_score;
  j["pass"] = r.pass;
  if (!r.unimodular) {
    j["unimodular"] = false;
    if (r.rhs_config_measure) {
      j["rhs_config_measure"] = json_of(*r.rhs_config_measure);
      j["z_config_measure"] = r.z_config_measure;
    }
  }
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"pass", ok}});
    j["checks"] = checks;
  }
  return j;
}

Json json_of(const InvarianceReport& r) {
  Json j;
  j["expected"] = r.expected;
  Json cases = Json::array();
  for (std::size_t k = 0; k < r.estimates.size(); ++k) {
    Json c = json_of(r.estimates[k]);
    c["radii"] = r.radii[k];
    c["z_expected"] = r.z_expected[k];
    cases.push_back(c);
  }
  j["cases"] = cases;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"z", p.z}});
  j["pairs"] = pairs;
  j["pass"] = r.pass;
  return j;
}

Json json_of(const TonksTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"m", r.m},
                    {"expected", r.expected},
                    {"estimate", json_of(r.estimate)},
                    {"z", r.z},
                    {"polymer_expected", r.polymer_expected},
                    {"polymer", json_of(r.polymer)},
                    {"polymer_z", r.polymer_z},
                    {"pass", r.pass}});
  }
  return Json{{"rows", rows}, {"pass", t.pass}};
}

Json json_of(const BalancedWeightReport& r) {
  return Json{{"n", r.n}, {"balanced", r.balanced}, {"unsigned_weighted", r.unsigned_weighted}, {"pass", r.pass}};
}

}  // namespace dimred
