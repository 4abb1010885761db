#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dimred/arrangement.hpp"
#include "dimred/io.hpp"
#include "dimred/mayer.hpp"

namespace dimred::cli {

/// Everything one subcommand needs, after flags and the config file have
/// been merged.
struct ExperimentConfig {
  std::string command;
  ArrangementSpec arrangement;
  int d = 1;
  std::optional<int> polymer_dim;  // polymer-volume only; defaults to d + 2
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format = "json";
  std::string out;

  std::vector<int> subset;                       // mmc; empty = ground set
  std::vector<std::vector<double>> radii_list;   // invariance
  std::vector<Json> shapes;                      // asa-dr; one entry or one per hyperplane
  ProjectionFn g = ProjectionFn::const1;         // project-law
  bool safe = false;                             // project-law
  int m_max = 3;                                 // tonks
  int orders = 3;                                // chi: random orders besides the identity
  std::string svg;                               // polymer-volume
  std::string dump_samples;                      // polymer-volume

  void validate() const;
  /// Reproducible echo: omits workers and output destination.
  Json to_json() const;
  /// Overrides fields present in j.
  void apply(const Json& j);
};

/// Runs the tool on argv-style arguments (program name excluded). Returns
/// 0 on success, 2 when a statistical check failed, 1 on usage or config
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimred::cli
