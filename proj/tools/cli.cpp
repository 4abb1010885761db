#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "dimred/matroid.hpp"
#include "dimred/polymer.hpp"
#include "dimred/verify.hpp"

namespace dimred::cli {

namespace {

struct Outcome {
  Json result;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::optional<bool> pass;
};

std::string num(double v) { return Json(v).dump(); }
std::string num(long long v) { return std::to_string(v); }

std::vector<std::string> estimate_cells(const MCEstimate& e) {
  return {num(e.mean), num(e.std_error), std::to_string(e.n_samples), std::to_string(e.seed)};
}

RunOptions run_options(const ExperimentConfig& c) {
  RunOptions o;
  o.n_samples = c.n_samples;
  o.seed = c.seed;
  o.workers = c.workers;
  return o;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

std::vector<std::vector<double>> parse_radii_list(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<double> radii;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        radii.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw PreconditionError("--radii-list: cannot parse '" + item + "' as a number");
      }
    }
    out.push_back(std::move(radii));
  }
  return out;
}

Outcome estimate_outcome(const std::string& quantity, const MCEstimate& e) {
  Outcome o;
  o.result = json_of(e);
  o.result["quantity"] = quantity;
  o.header = {"quantity", "mean", "stderr", "n_samples", "seed"};
  auto cells = estimate_cells(e);
  cells.insert(cells.begin(), quantity);
  o.rows.push_back(cells);
  return o;
}

Outcome report_outcome(const DRReport& r) {
  Outcome o;
  o.result = json_of(r);
  o.header = {"arrangement", "d", "lhs_mean", "lhs_stderr", "rhs_mean", "rhs_stderr", "z_score", "pass"};
  o.rows.push_back({r.arrangement, std::to_string(r.d), num(r.lhs.mean), num(r.lhs.std_error), num(r.rhs.mean),
                    num(r.rhs.std_error), num(r.z_score), r.pass ? "true" : "false"});
  o.pass = r.pass;
  return o;
}

Outcome cmd_chi(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  const long long chi = mv.chi_at_zero();
  const int r = mv.rank();
  Outcome o;
  o.result["chi0"] = chi;
  o.result["rank"] = r;
  o.result["bases"] = mv.bases().size();
  o.header = {"order", "safe_bases", "chi0", "matches"};
  Json orders = Json::array();
  bool ok = true;
  for (int k = 0; k <= c.orders; ++k) {
    const LinearOrder ord = k == 0 ? LinearOrder::identity(mv.size())
                                   : LinearOrder::random(mv.size(), c.seed + static_cast<std::uint64_t>(k));
    const long long safe = mv.safe_base_count(mv.ground_set(), ord);
    const bool match = ((r % 2 == 0) ? safe : -safe) == chi;
    ok = ok && match;
    orders.push_back({{"order", ord.sequence()}, {"safe_bases", safe}, {"matches", match}});
    o.rows.push_back({join(ord.sequence(), ' '), num(safe), num(chi), match ? "true" : "false"});
  }
  o.result["orders"] = orders;
  o.pass = ok;
  return o;
}

Outcome cmd_bases(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  Outcome o;
  Json list = Json::array();
  o.header = {"index", "bitmask", "elements", "labels"};
  const auto bases = mv.bases();
  for (std::size_t k = 0; k < bases.size(); ++k) {
    std::vector<std::string> labels;
    std::string label_cell;
    for (int e : bases[k].elements()) {
      labels.push_back(mv.arrangement().hyperplane(e).label);
      label_cell += (label_cell.empty() ? "" : " ") + labels.back();
    }
    list.push_back({{"bitmask", bases[k].bits}, {"elements", bases[k].elements()}, {"labels", labels}});
    o.rows.push_back({std::to_string(k), std::to_string(bases[k].bits), join(bases[k].elements(), ' '), label_cell});
  }
  o.result["rank"] = mv.rank();
  o.result["count"] = bases.size();
  o.result["bases"] = list;
  return o;
}

GroundSubset subset_of(const ExperimentConfig& c, const MatroidView& mv) {
  if (c.subset.empty()) return mv.ground_set();
  GroundSubset s;
  for (int e : c.subset) {
    if (e < 0 || e >= mv.size()) throw PreconditionError("subset element " + std::to_string(e) + " out of range");
    s = s.with(e);
  }
  return s;
}

Outcome cmd_mmc(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  const GroundSubset H = subset_of(c, mv);
  Outcome o = c.d == 0 ? estimate_outcome("mmc", MCEstimate::exact(static_cast<double>(mmc_d0(mv, H)), c.seed))
                       : estimate_outcome("mmc", mmc_mc(mv, H, c.d, run_options(c)));
  o.result["H"] = H.elements();
  o.result["exact"] = c.d == 0;
  return o;
}

Outcome cmd_pressure(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  Outcome o = estimate_outcome("pressure_coefficient", pressure_coefficient(mv, c.d, run_options(c)));
  o.result["exact"] = c.d == 0;
  return o;
}

Outcome cmd_polymer_volume(const ExperimentConfig& c) {
  const Arrangement arr = c.arrangement.build();
  const MatroidView mv(arr);
  const int D = c.polymer_dim.value_or(c.d + 2);
  Outcome o = estimate_outcome("polymer_volume", volume_mc(mv, D, {}, run_options(c)));
  o.result["D"] = D;
  if (D == 2)
    o.result["planar_expected"] =
        std::pow(2.0 * std::numbers::pi, arr.dim()) * std::abs(static_cast<double>(mv.chi_at_zero()));
  if (!c.dump_samples.empty()) {
    std::ofstream f(c.dump_samples);
    if (!f) throw PreconditionError("cannot open '" + c.dump_samples + "' for writing");
    write_samples_csv(f, draw_samples(mv, D, {}, std::min<std::uint64_t>(c.n_samples, 10000), c.seed));
  }
  if (!c.svg.empty()) {
    if (D != 2) throw PreconditionError("--svg needs D = 2");
    const auto samples = draw_samples(mv, D, {}, 256, c.seed);
    const auto it = std::find_if(samples.begin(), samples.end(), [](const PolymerSample& s) { return s.accepted; });
    std::ofstream f(c.svg);
    if (!f) throw PreconditionError("cannot open '" + c.svg + "' for writing");
    write_sample_svg(f, arr, it != samples.end() ? *it : samples.front());
  }
  return o;
}

Outcome cmd_invariance(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  std::vector<std::vector<double>> radii = c.radii_list;
  if (radii.empty()) {
    radii.emplace_back(static_cast<std::size_t>(mv.size()), 1.0);
    std::vector<double> varied;
    for (int e = 0; e < mv.size(); ++e) varied.push_back(1.0 + e % 3);
    radii.push_back(varied);
  }
  const InvarianceReport rep = planar_invariance_check(mv, radii, run_options(c));
  Outcome o;
  o.result = json_of(rep);
  o.header = {"case", "radii", "mean", "stderr", "expected", "z_expected"};
  for (std::size_t k = 0; k < rep.estimates.size(); ++k) {
    std::string rs;
    for (double r : rep.radii[k]) rs += (rs.empty() ? "" : " ") + num(r);
    o.rows.push_back({std::to_string(k), rs, num(rep.estimates[k].mean), num(rep.estimates[k].std_error),
                      num(rep.expected), num(rep.z_expected[k])});
  }
  o.pass = rep.pass;
  return o;
}

Outcome cmd_dr_check(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  return report_outcome(check_dr(mv, c.d, run_options(c)));
}

Outcome cmd_tonks(const ExperimentConfig& c) {
  const TonksTable t = tonks_series_check(c.m_max, c.d, run_options(c));
  Outcome o;
  o.result = json_of(t);
  o.header = {"m", "expected", "mean", "stderr", "z", "polymer_expected", "polymer_mean", "polymer_stderr",
              "polymer_z", "pass"};
  for (const auto& r : t.rows)
    o.rows.push_back({std::to_string(r.m), num(r.expected), num(r.estimate.mean), num(r.estimate.std_error), num(r.z),
                      num(r.polymer_expected), num(r.polymer.mean), num(r.polymer.std_error), num(r.polymer_z),
                      r.pass ? "true" : "false"});
  o.pass = t.pass;
  return o;
}

Outcome cmd_type_d(const ExperimentConfig& c) {
  return report_outcome(typeD_unbalanced_check(c.arrangement.n, c.d, run_options(c)));
}

std::vector<AsaShape> resolve_shapes(const ExperimentConfig& c, int hyperplanes) {
  std::vector<AsaShape> shapes;
  for (Json j : c.shapes) {
    if (!j.contains("D")) j["D"] = c.d + 2;
    shapes.push_back(asa_shape_from_json(j));
  }
  if (shapes.empty()) shapes.push_back(AsaShape::sphere(c.d + 2));
  if (shapes.size() == 1) shapes.assign(static_cast<std::size_t>(hyperplanes), shapes.front());
  return shapes;
}

Outcome cmd_asa_dr(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  const auto shapes = resolve_shapes(c, mv.size());
  Outcome o = report_outcome(check_asa_dr(mv, shapes, c.d, run_options(c)));
  Json js = Json::array();
  for (const auto& s : shapes) js.push_back(json_of(s));
  o.result["shapes"] = js;
  return o;
}

Outcome cmd_project_law(const ExperimentConfig& c) {
  const MatroidView mv(c.arrangement.build());
  const RunOptions opts = run_options(c);
  const ProjectionReport rep = project_expectation(mv, c.d, c.g, opts);
  Outcome o;
  const double z = z_score(rep.polymer, rep.mmc);
  o.result["g"] = to_string(c.g);
  o.result["polymer"] = json_of(rep.polymer);
  o.result["mmc"] = json_of(rep.mmc);
  o.result["z_score"] = z;
  o.header = {"side", "mean", "stderr", "n_samples", "seed", "z_vs_mmc"};
  auto row = [&](const std::string& name, const MCEstimate& e, double zz) {
    auto cells = estimate_cells(e);
    cells.insert(cells.begin(), name);
    cells.push_back(num(zz));
    o.rows.push_back(cells);
  };
  row("polymer", rep.polymer, z);
  row("mmc", rep.mmc, 0.0);
  bool pass = std::abs(z) < kZThreshold;
  if (c.safe) {
    RunOptions s = opts;
    s.stream_base = 2 * kSideStride;
    const MCEstimate safe = safe_projection_expectation(mv, c.d, c.g, LinearOrder::identity(mv.size()), s);
    const double zs = z_score(safe, rep.mmc);
    o.result["safe"] = json_of(safe);
    o.result["safe_z_score"] = zs;
    row("safe", safe, zs);
    pass = pass && std::abs(zs) < kZThreshold;
  }
  o.pass = pass;
  return o;
}

Outcome dispatch(const ExperimentConfig& c) {
  if (c.command == "chi") return cmd_chi(c);
  if (c.command == "bases") return cmd_bases(c);
  if (c.command == "mmc") return cmd_mmc(c);
  if (c.command == "pressure-coeff") return cmd_pressure(c);
  if (c.command == "polymer-volume") return cmd_polymer_volume(c);
  if (c.command == "invariance") return cmd_invariance(c);
  if (c.command == "dr-check") return cmd_dr_check(c);
  if (c.command == "tonks") return cmd_tonks(c);
  if (c.command == "type-d") return cmd_type_d(c);
  if (c.command == "asa-dr") return cmd_asa_dr(c);
  if (c.command == "project-law") return cmd_project_law(c);
  throw PreconditionError("unknown subcommand '" + c.command + "'");
}

const std::vector<std::pair<std::string, std::string>>& subcommands() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"chi", "chi(0) and safe-base counts for several orders"},
      {"bases", "list the bases of the arrangement matroid"},
      {"mmc", "Mayer coefficient of one spanning subset (exact at d = 0)"},
      {"pressure-coeff", "sum of Mayer coefficients over spanning subsets"},
      {"polymer-volume", "Monte Carlo volume of the H-polymer space"},
      {"invariance", "planar polymer volume under several radii assignments"},
      {"dr-check", "dimensional-reduction identity for one arrangement"},
      {"tonks", "braid pressure coefficients against the hard-rod values"},
      {"type-d", "type-D coefficient identity with signed-graph cross-checks"},
      {"asa-dr", "dimensional reduction with Archimedean spherical arrays"},
      {"project-law", "projection law for a built-in test function"},
  };
  return list;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_samples < 1) throw PreconditionError("n_samples must be >= 1");
  if (workers < 1) throw PreconditionError("workers must be >= 1");
  if (d < 0) throw PreconditionError("d must be >= 0");
  if (format != "json" && format != "csv") throw PreconditionError("format must be json or csv");
  if (orders < 0) throw PreconditionError("orders must be >= 0");
}

Json ExperimentConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["arrangement"] = json_of(arrangement);
  j["d"] = d;
  if (polymer_dim) j["D"] = *polymer_dim;
  j["n_samples"] = n_samples;
  j["seed"] = seed;
  j["format"] = format;
  if (command == "mmc" && !subset.empty()) j["subset"] = subset;
  if (command == "invariance" && !radii_list.empty()) j["radii_list"] = radii_list;
  if (command == "asa-dr" && !shapes.empty()) j["shapes"] = shapes;
  if (command == "project-law") {
    j["g"] = to_string(g);
    j["safe"] = safe;
  }
  if (command == "tonks") j["m_max"] = m_max;
  if (command == "chi") j["orders"] = orders;
  if (!svg.empty()) j["svg"] = svg;
  if (!dump_samples.empty()) j["dump_samples"] = dump_samples;
  return j;
}

void ExperimentConfig::apply(const Json& j) {
  if (!j.is_object()) throw PreconditionError("config: top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    try {
      if (key == "command") {
        if (v.get<std::string>() != command)
          throw PreconditionError("config is for '" + v.get<std::string>() + "', not '" + command + "'");
      } else if (key == "arrangement") {
        arrangement = arrangement_spec_from_json(v);
      } else if (key == "d") {
        d = v.get<int>();
      } else if (key == "D") {
        polymer_dim = v.get<int>();
      } else if (key == "n_samples") {
        if (v.is_number_integer() && v.get<long long>() < 1) throw PreconditionError("n_samples must be >= 1");
        n_samples = v.get<std::uint64_t>();
      } else if (key == "seed") {
        seed = v.get<std::uint64_t>();
      } else if (key == "workers") {
        workers = v.get<int>();
      } else if (key == "format") {
        format = v.get<std::string>();
      } else if (key == "subset") {
        subset = v.get<std::vector<int>>();
      } else if (key == "radii_list") {
        radii_list = v.get<std::vector<std::vector<double>>>();
      } else if (key == "shapes") {
        shapes = v.get<std::vector<Json>>();
      } else if (key == "g") {
        g = parse_projection(v.get<std::string>());
      } else if (key == "safe") {
        safe = v.get<bool>();
      } else if (key == "m_max") {
        m_max = v.get<int>();
      } else if (key == "orders") {
        orders = v.get<int>();
      } else if (key == "svg") {
        svg = v.get<std::string>();
      } else if (key == "dump_samples") {
        dump_samples = v.get<std::string>();
      } else {
        throw PreconditionError("config: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError("config: bad value for '" + key + "': " + e.what());
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid Mayer coefficients, H-polymers and dimensional-reduction checks", "dimred"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string family;
  std::string radii_list;
  std::string shape;
  double length = 1.0;
  std::string g;
  std::string config_path;

  for (const auto& [name, help] : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--family", family, "braid, coxeter_d, coxeter_b, threshold, dowling, widom_rowlinson");
    sub->add_option("--n", cfg.arrangement.n, "family size parameter");
    sub->add_option("--k", cfg.arrangement.k, "root-of-unity order (dowling)");
    sub->add_option("--colors", cfg.arrangement.colours, "colour class sizes (widom_rowlinson)")->delimiter(',');
    sub->add_option("--radii", cfg.arrangement.radii, "per-hyperplane radii, comma separated")->delimiter(',');
    sub->add_option("--d", cfg.d, "real dimension per point");
    sub->add_option("--samples", cfg.n_samples, "Monte Carlo samples");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--workers", cfg.workers, "worker threads");
    sub->add_option("--out", cfg.out, "write output to this path");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--config", config_path, "JSON config file; its keys override flags");
    if (name == "mmc") sub->add_option("--subset", cfg.subset, "hyperplane indices of H")->delimiter(',');
    if (name == "polymer-volume") {
      sub->add_option("--D", cfg.polymer_dim, "polymer dimension (default d + 2)");
      sub->add_option("--svg", cfg.svg, "write a D = 2 snapshot");
      sub->add_option("--dump-samples", cfg.dump_samples, "write sampled configurations as CSV");
    }
    if (name == "invariance") sub->add_option("--radii-list", radii_list, "assignments like '1,1,1;1,2,5'");
    if (name == "asa-dr") {
      sub->add_option("--shape", shape, "sphere, cylinder or capped_cylinder");
      sub->add_option("--length", length, "cylinder length L");
    }
    if (name == "project-law") {
      sub->add_option("--g", g, "const1, norm_sq or indicator_halfspace");
      sub->add_flag("--safe", cfg.safe, "also run the safe-base estimator");
    }
    if (name == "tonks") sub->add_option("--m-max", cfg.m_max, "largest particle number (2..4)");
    if (name == "chi") sub->add_option("--orders", cfg.orders, "random orders besides the identity");
  }

  std::vector<const char*> argv{"dimred"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "type-d") cfg.arrangement.family = Family::coxeter_d;
    if (!family.empty()) cfg.arrangement.family = parse_family(family);
    if (!radii_list.empty()) cfg.radii_list = parse_radii_list(radii_list);
    if (!shape.empty()) {
      Json s{{"kind", shape}};
      if (shape != "sphere") s["length"] = length;
      cfg.shapes = {s};
    }
    if (!g.empty()) cfg.g = parse_projection(g);
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw PreconditionError("cannot open config file '" + config_path + "'");
      Json j;
      try {
        j = Json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("config file '" + config_path + "' is not valid JSON: " + e.what());
      }
      cfg.apply(j);
    }
    cfg.validate();

    const auto start = std::chrono::steady_clock::now();
    const Outcome o = dispatch(cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream text;
    if (cfg.format == "json") {
      Json doc;
      doc["config"] = cfg.to_json();
      doc["result"] = o.result;
      if (o.pass) doc["pass"] = *o.pass;
      doc["run"] = {{"workers", cfg.workers}, {"wall_time", wall}};
      text << doc.dump(2) << '\n';
    } else {
      for (std::size_t k = 0; k < o.header.size(); ++k) text << (k ? "," : "") << o.header[k];
      text << '\n';
      for (const auto& row : o.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) text << (k ? "," : "") << row[k];
        text << '\n';
      }
    }
    if (cfg.out.empty()) {
      out << text.str();
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw PreconditionError("cannot open '" + cfg.out + "' for writing");
      f << text.str();
    }
    return (o.pass && !*o.pass) ? 2 : 0;
  } catch (const Error& e) {
    err << "dimred: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "dimred: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dimred::cli
