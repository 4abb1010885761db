#include "dimred/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "dimred/mayer.hpp"
#include "dimred/polymer.hpp"
#include "dimred/signed_graph.hpp"

namespace dimred {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void finish(DRReport& rep) {
  rep.z_score = z_score(rep.lhs, rep.rhs);
  rep.pass = std::abs(rep.z_score) < kZThreshold;
  for (const auto& [name, ok] : rep.checks) rep.pass = rep.pass && ok;
}

RunOptions side(const RunOptions& opts, int k) {
  RunOptions s = opts;
  s.stream_base = opts.stream_base + static_cast<std::uint64_t>(k) * kSideStride;
  return s;
}

void add_config_measure(DRReport& rep, const MatroidView& matroid, int d, const RunOptions& opts, double factor) {
  rep.unimodular = is_unimodular(matroid);
  if (rep.unimodular || d == 0) return;
  rep.rhs_config_measure = volume_mc_config_measure(matroid, d + 2, side(opts, 2)).scaled(factor);
  rep.z_config_measure = z_score(rep.lhs, *rep.rhs_config_measure);
}

}  // namespace

DRReport check_dr(const MatroidView& matroid, int d, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Arrangement& arr = matroid.arrangement();
  arr.check_point_dim(d);
  if (!arr.unit_radii()) throw PreconditionError("check_dr: the identity holds for unit radii only");
  DRReport rep;
  rep.arrangement = arr.name();
  rep.quantity = "dr-check";
  rep.d = d;
  const double factor = std::pow(-2.0 * std::numbers::pi, arr.dim());
  rep.lhs = pressure_coefficient(matroid, d, side(opts, 0)).scaled(factor);
  rep.rhs = volume_mc(matroid, d + 2, {}, side(opts, 1));
  add_config_measure(rep, matroid, d, opts, 1.0);
  finish(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

long long tonks_coefficient(int m) {
  if (m < 1) throw PreconditionError("tonks_coefficient: m must be >= 1");
  long long p = 1;
  for (int i = 1; i < m; ++i) p *= m;
  return (m % 2 == 0) ? -p : p;
}

TonksTable tonks_series_check(int m_max, int d, const RunOptions& opts) {
  if (m_max < 2 || m_max > 4) throw PreconditionError("tonks_series_check: m_max must be in 2..4");
  if (d != 1) throw PreconditionError("tonks_series_check: the hard-rod values are for d = 1");
  TonksTable table;
  table.pass = true;
  for (int m = 2; m <= m_max; ++m) {
    const MatroidView matroid(Arrangement::braid(m));
    TonksRow row;
    row.m = m;
    row.expected = tonks_coefficient(m);
    RunOptions sub = side(opts, 0);
    sub.stream_base += static_cast<std::uint64_t>(m) * kCaseStride;
    row.estimate = pressure_coefficient(matroid, d, sub);
    row.z = z_score(row.estimate, MCEstimate::exact(static_cast<double>(row.expected)));
    row.polymer_expected = std::pow(-2.0 * std::numbers::pi, m - 1) * static_cast<double>(row.expected);
    sub.stream_base += kSideStride;
    row.polymer = volume_mc(matroid, d + 2, {}, sub);
    row.polymer_z = z_score(row.polymer, MCEstimate::exact(row.polymer_expected));
    row.pass = std::abs(row.z) < kZThreshold && std::abs(row.polymer_z) < kZThreshold;
    table.pass = table.pass && row.pass;
    table.rows.push_back(row);
  }
  return table;
}

bool typeD_spanning_sets_agree(int n) {
  const MatroidView matroid(Arrangement::coxeter_d(n));
  const std::uint64_t end = std::uint64_t{1} << matroid.size();
  for (std::uint64_t m = 0; m < end; ++m) {
    const GroundSubset s(m);
    const bool exact = matroid.is_spanning(s);
    const bool graph = signed_graph_rank(signed_graph_of(n, s)) == n;
    if (exact != graph) return false;
  }
  return true;
}

DRReport typeD_unbalanced_check(int n, int d, const RunOptions& opts) {
  if (n != 2 && n != 3) throw PreconditionError("typeD_unbalanced_check: n must be 2 or 3");
  const auto start = std::chrono::steady_clock::now();
  const MatroidView matroid(Arrangement::coxeter_d(n));
  DRReport rep;
  rep.arrangement = matroid.arrangement().name();
  rep.quantity = "type-d";
  rep.d = d;
  rep.lhs = pressure_coefficient(matroid, d, side(opts, 0));
  const double inv_factor = std::pow(-2.0 * std::numbers::pi, -n);
  rep.rhs = volume_mc(matroid, d + 2, {}, side(opts, 1)).scaled(inv_factor);
  add_config_measure(rep, matroid, d, opts, inv_factor);
  rep.checks.emplace_back("spanning subsets = signed graphs of rank n", typeD_spanning_sets_agree(n));
  const long long chi = matroid.chi_at_zero();
  const long long safe = matroid.safe_base_count(matroid.ground_set(), LinearOrder::identity(matroid.size()));
  rep.checks.emplace_back("chi(0) = (-1)^n safe bases", chi == ((n % 2 == 0) ? safe : -safe));
  finish(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

BalancedWeightReport balanced_weight_check(int n) {
  if (n < 1 || n > 5) throw PreconditionError("balanced_weight_check: n must be in 1..5");
  BalancedWeightReport rep;
  rep.n = n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t p = pairs.size();
  rep.balanced.assign(p + 1, 0);
  rep.unsigned_weighted.assign(p + 1, 0);

  // Each pair carries no edge, +, -, or both.
  std::uint64_t states = 1;
  for (std::size_t k = 0; k < p; ++k) states *= 4;
  std::vector<SignedEdge> edges;
  for (std::uint64_t code = 0; code < states; ++code) {
    edges.clear();
    std::uint64_t c = code;
    for (std::size_t k = 0; k < p; ++k, c /= 4) {
      const auto [i, j] = pairs[k];
      if (c % 4 == 1 || c % 4 == 3) edges.push_back({i, j, Sign::plus});
      if (c % 4 == 2 || c % 4 == 3) edges.push_back({i, j, Sign::minus});
    }
    const SignedGraph g(n, edges);
    if (is_balanced(g)) ++rep.balanced[edges.size()];
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < p; ++k)
      if (mask >> k & 1) edges.push_back({pairs[k].first, pairs[k].second, Sign::plus});
    const SignedGraph g(n, edges);
    const int comps = static_cast<int>(g.components().size());
    rep.unsigned_weighted[edges.size()] += 1LL << (n - comps);
  }
  rep.pass = rep.balanced == rep.unsigned_weighted;
  return rep;
}

DRReport check_asa_dr(const MatroidView& matroid, std::span<const AsaShape> shapes, int d, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  check_shapes(matroid, shapes, d);
  DRReport rep;
  rep.arrangement = matroid.arrangement().name();
  rep.quantity = "asa-dr";
  rep.d = d;
  const double factor = std::pow(-2.0 * std::numbers::pi, matroid.rank());
  rep.lhs = pressure_asa(matroid, shapes, d, side(opts, 0)).scaled(factor);
  rep.rhs = asa_volume_mc(matroid, shapes, side(opts, 1));
  finish(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

}  // namespace dimred
