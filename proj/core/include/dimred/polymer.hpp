#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "dimred/estimate.hpp"
#include "dimred/geometry.hpp"
#include "dimred/matroid.hpp"
#include "dimred/mayer.hpp"

namespace dimred {

/// One draw of the H-polymer sampler for a fixed base S.
struct PolymerSample {
  GroundSubset base;
  int D = 0;
  std::vector<double> directions;  // |S| blocks of D, base elements ascending
  std::vector<double> x;           // n blocks of D
  bool accepted = false;
};

/// Float copy of the exact inverse of a base's normal matrix; solves
/// h_{e_k}(x) = t_k for the k-th base element, coordinatewise.
class BaseSystem {
 public:
  BaseSystem(const Arrangement& arr, GroundSubset base);

  GroundSubset base() const { return base_; }
  const std::vector<int>& elements() const { return elements_; }
  /// |det| of the base's normal matrix (complex modulus for cyclotomic).
  double abs_det() const { return abs_det_; }
  /// targets: |S| blocks of D; x: n blocks of D.
  void solve(std::span<const double> targets, int D, std::span<double> x) const;

 private:
  GroundSubset base_;
  std::vector<int> elements_;
  int n_;
  bool complex_;
  double abs_det_ = 1.0;
  std::vector<std::complex<double>> inverse_;  // n x n row-major
};

/// radii empty means the arrangement's own radii.
PolymerSample sample_for_base(const MatroidView& matroid, GroundSubset base, int D, std::span<const double> radii,
                              RngStream& rng);

/// Largest | ||h_e(x)|| - R_e | over e in S, and whether every e outside S
/// has ||h_e(x)|| > R_e.
struct SampleCheck {
  double link_residual = 0.0;
  bool disjoint = false;
};
SampleCheck check_sample(const Arrangement& arr, const PolymerSample& sample, std::span<const double> radii);

/// Sum over bases S of |S^{D-1}|^n times the acceptance rate of S. The
/// budget n_samples is split equally across bases. rotation, if given, is a
/// D x D row-major matrix applied to every sampled direction.
MCEstimate volume_mc(const MatroidView& matroid, int D, std::span<const double> radii, const RunOptions& opts,
                     std::span<const double> rotation = {});

/// True iff every base has |det| = 1.
bool is_unimodular(const MatroidView& matroid);

/// volume_mc with each base term divided by |det A_S|^{D-2}: the polymer
/// measure whose y-block is Lebesgue measure on configuration coordinates
/// rather than on the values h_e(y). Equals volume_mc for unimodular
/// arrangements.
MCEstimate volume_mc_config_measure(const MatroidView& matroid, int D, const RunOptions& opts);

struct InvarianceReport {
  double expected = 0.0;  // (2 pi)^n |chi(0)|
  std::vector<std::vector<double>> radii;
  std::vector<MCEstimate> estimates;
  std::vector<double> z_expected;
  struct Pair {
    std::size_t a = 0;
    std::size_t b = 0;
    double z = 0.0;
  };
  std::vector<Pair> pairs;
  bool pass = false;
};

/// volume_mc at D = 2 for each radii assignment, compared against the
/// closed form and pairwise. Passes when every |z| < 4.
InvarianceReport planar_invariance_check(const MatroidView& matroid, const std::vector<std::vector<double>>& radii_list,
                                         const RunOptions& opts);

struct ProjectionReport {
  MCEstimate polymer;  // int g(y) over polymers of dimension d + 2
  MCEstimate mmc;      // (-2 pi)^n sum_G int g(y) chi_G(0) dy
};
/// g is applied to the last d coordinates of each polymer point, and to the
/// configuration itself on the Mayer side.
ProjectionReport project_expectation(const MatroidView& matroid, int d, ProjectionFn g, const RunOptions& opts);

/// (2 pi)^n sum_G int g(y) #{order-safe bases of G} dy.
MCEstimate safe_projection_expectation(const MatroidView& matroid, int d, ProjectionFn g, const LinearOrder& order,
                                       const RunOptions& opts);

/// ASA polymer volume: targets h_e(x) for e in S are drawn uniformly from
/// the surface of alpha_e; e outside S must leave the solid of alpha_e.
/// Each base term is weighted by the product of surface totals.
MCEstimate asa_volume_mc(const MatroidView& matroid, std::span<const AsaShape> shapes, const RunOptions& opts);

/// count samples, cycling through the bases, sample k on RngStream(seed, k).
std::vector<PolymerSample> draw_samples(const MatroidView& matroid, int D, std::span<const double> radii,
                                        std::size_t count, std::uint64_t seed);
/// Header base,accepted,x0,x1,...
void write_samples_csv(std::ostream& out, const std::vector<PolymerSample>& samples);
/// Static picture of one D = 2 configuration: points, link segments for
/// hyperplanes of the form x_i - x_j or x_i.
void write_sample_svg(std::ostream& out, const Arrangement& arr, const PolymerSample& sample);

}  // namespace dimred
