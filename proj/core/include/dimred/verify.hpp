#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dimred/estimate.hpp"
#include "dimred/geometry.hpp"
#include "dimred/matroid.hpp"

namespace dimred {

/// Two-sided comparison of a Mayer-side and a polymer-side quantity.
struct DRReport {
  std::string arrangement;
  std::string quantity;
  int d = 0;
  MCEstimate lhs;
  MCEstimate rhs;
  double z_score = 0.0;
  bool pass = false;
  double wall_time = 0.0;  // seconds
  /// Non-unimodular arrangements also report the polymer side under the
  /// configuration-coordinate measure; informational, not part of pass.
  bool unimodular = true;
  std::optional<MCEstimate> rhs_config_measure;
  double z_config_measure = 0.0;
  /// Extra exact checks folded into pass.
  std::vector<std::pair<std::string, bool>> checks;
};

/// lhs = (-2 pi)^n * pressure coefficient at d, rhs = polymer volume at
/// d + 2. Radii must all be 1; cyclotomic arrangements need even d.
DRReport check_dr(const MatroidView& matroid, int d, const RunOptions& opts);

/// (-1)^{m-1} m^{m-1}: the 1-D hard-rod Mayer coefficient on m particles.
long long tonks_coefficient(int m);

struct TonksRow {
  int m = 0;
  long long expected = 0;
  MCEstimate estimate;  // braid(m) pressure coefficient at d = 1
  double z = 0.0;
  double polymer_expected = 0.0;  // (-2 pi)^{m-1} c_m
  MCEstimate polymer;             // braid(m) polymer volume at D = 3
  double polymer_z = 0.0;
  bool pass = false;
};
struct TonksTable {
  std::vector<TonksRow> rows;
  bool pass = false;
};
/// m = 2..m_max, 2 <= m_max <= 4; only d = 1 has the hard-rod closed form.
TonksTable tonks_series_check(int m_max, int d, const RunOptions& opts);

/// Spanning subsets of coxeter_d(n) by exact rank agree with the signed
/// graphs of rank n.
bool typeD_spanning_sets_agree(int n);

/// lhs = MMC sum of coxeter_d(n) at d, rhs = (-2 pi)^{-n} vol(P(d + 2)),
/// n in {2, 3}, plus the exact cross-checks.
DRReport typeD_unbalanced_check(int n, int d, const RunOptions& opts);

/// Edge-count polynomials: balanced signed graphs on [n] against unsigned
/// graphs weighted 2^{n - #components}.
struct BalancedWeightReport {
  int n = 0;
  std::vector<long long> balanced;
  std::vector<long long> unsigned_weighted;
  bool pass = false;
};
BalancedWeightReport balanced_weight_check(int n);

/// lhs = (-2 pi)^n * ASA pressure coefficient, rhs = ASA polymer volume.
DRReport check_asa_dr(const MatroidView& matroid, std::span<const AsaShape> shapes, int d, const RunOptions& opts);

}  // namespace dimred
