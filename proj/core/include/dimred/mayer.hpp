#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dimred/estimate.hpp"
#include "dimred/geometry.hpp"
#include "dimred/matroid.hpp"

namespace dimred {

/// Built-in test functions g of the projected configuration y in (R^d)^n.
enum class ProjectionFn { const1, norm_sq, indicator_halfspace };

std::string to_string(ProjectionFn g);
ProjectionFn parse_projection(const std::string& text);
/// y holds n consecutive blocks of d coordinates.
double apply_projection(ProjectionFn g, std::span<const double> y, int n, int d);

/// Memo of a per-region weight keyed by subset bitmask. Concurrent lookups
/// take a shared lock; inserts take the exclusive lock.
class SubsetCache {
 public:
  using Compute = std::function<double(GroundSubset)>;
  explicit SubsetCache(Compute compute) : compute_(std::move(compute)) {}

  double get(GroundSubset s);
  std::size_t size() const;

 private:
  Compute compute_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, double> values_;
};

/// Integrand of a Gamma-decomposition integral
///   sum over rank-n regions G of  int_{Gamma_G} g(x) w(G) dx.
/// Regions are cut by balls ||h_e(x)|| <= R_e, or by ASA bottoms when
/// shapes is set (one shape per hyperplane).
struct RegionIntegrand {
  enum class Weight { chi, safe_count };

  ProjectionFn g = ProjectionFn::const1;
  Weight weight = Weight::chi;
  /// Used for Weight::safe_count; identity order if unset.
  std::optional<LinearOrder> order;
  std::optional<std::vector<AsaShape>> shapes;
};

/// Uniform sampling in the bounding box, one pass over all regions.
MCEstimate gamma_integral(const MatroidView& matroid, int d, const RegionIntegrand& integrand,
                          const RunOptions& opts);

/// (-1)^{|H|}; the d = 0 Mayer coefficient. H must be spanning.
long long mmc_d0(const MatroidView& matroid, GroundSubset H);

/// (-1)^{|H|} vol{x : ||h_e(x)|| <= R_e for all e in H}, d >= 1.
MCEstimate mmc_mc(const MatroidView& matroid, GroundSubset H, int d, const RunOptions& opts);

/// Sum of Mayer coefficients over spanning subsets. d = 0 is exact
/// (chi(0)); d >= 1 uses the Gamma-decomposition estimator.
MCEstimate pressure_coefficient(const MatroidView& matroid, int d, const RunOptions& opts);

/// Same quantity as a sum of independent mmc_mc runs over every spanning
/// subset. Cross-validation only: cost grows with the number of subsets.
MCEstimate pressure_coefficient_by_enumeration(const MatroidView& matroid, int d, const RunOptions& opts);

/// Throws DimensionMismatch unless there is one shape per hyperplane and
/// every shape has dimension d + 2.
void check_shapes(const MatroidView& matroid, std::span<const AsaShape> shapes, int d);

/// (-1)^{|H|} vol{x : h_e(x) in bottom(alpha_e) for all e in H}.
MCEstimate mmc_asa(const MatroidView& matroid, GroundSubset H, std::span<const AsaShape> shapes, int d,
                   const RunOptions& opts);

/// Sum of ASA Mayer coefficients over spanning subsets.
MCEstimate pressure_asa(const MatroidView& matroid, std::span<const AsaShape> shapes, int d,
                        const RunOptions& opts);

/// Stream-id strides that keep independent estimators sharing one seed on
/// disjoint streams.
inline constexpr std::uint64_t kBaseStride = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kCaseStride = std::uint64_t{1} << 36;
inline constexpr std::uint64_t kSideStride = std::uint64_t{1} << 52;

}  // namespace dimred
