#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dimred/matroid.hpp"
#include "dimred/rng.hpp"

namespace dimred {

/// Surface area of the unit sphere S^{D-1} in R^D (D = 1 gives 2).
double sphere_area(int D);
/// Volume of the unit ball in R^m (m = 0 gives 1).
double ball_volume(int m);

/// Uniform point on S^{D-1} by normalizing a standard Gaussian vector.
void sample_unit_sphere(int D, RngStream& rng, std::span<double> out);
std::vector<double> sample_unit_sphere(int D, RngStream& rng);

/// Codimension-2 split of a point of S^{D-1}: w = first two coordinates,
/// y = the remaining D-2. Uniform sphere points give y uniform on B^{D-2}.
struct ArchimedesSplit {
  std::array<double, 2> w{};
  std::vector<double> y;
};
ArchimedesSplit archimedes_split(std::span<const double> point);

/// Archimedean spherical array S^1 x_rho bottom in R^D. The S^1 factor sits
/// on the first two coordinates; the bottom lives in the remaining D-2.
/// Cylinders use the interval [-L/2, L/2] on the last coordinate; capped
/// cylinders add unit half-ball caps centred at the two ends.
class AsaShape {
 public:
  enum class Kind { sphere, cylinder, capped_cylinder };

  static AsaShape sphere(int D);
  static AsaShape cylinder(int D, double length);
  static AsaShape capped_cylinder(int D, double length);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int bottom_dim() const { return dim_ - 2; }
  double length() const { return length_; }
  std::string name() const;

  /// rho(y)^2 for y in R^{D-2}; negative outside the warp's support.
  double warp_sq(std::span<const double> y) const;
  bool in_bottom(std::span<const double> y) const;
  /// Every bottom point has Euclidean norm at most this.
  double bottom_radius() const;
  double bottom_volume() const;
  /// p in R^D lies in the closed solid bounded by the surface.
  bool inside_solid(std::span<const double> p) const;
  /// Uniform point with respect to surface measure: y uniform on the bottom,
  /// w uniform on the circle of radius rho(y).
  void sample_surface(RngStream& rng, std::span<double> out) const;
  /// Uniform point of the bottom.
  void sample_bottom(RngStream& rng, std::span<double> out) const;

 private:
  AsaShape(Kind kind, int dim, double length);

  Kind kind_;
  int dim_;
  double length_;
};

/// Total surface measure in closed form: sphere 2 pi^{D/2}/Gamma(D/2);
/// cylinder |S^{D-2}| L; capped cylinder |S^{D-2}| L + |S^{D-1}|.
double surface_measure_total(const AsaShape& shape);

/// Half-width M of a box [-M, M]^{dn} that contains every configuration with
/// ||h_e(x)|| <= R for all e in some base contained in `within`.
struct BoundingBox {
  double half_width = 0.0;
  double volume(int total_coords) const { return std::pow(2.0 * half_width, total_coords); }
};
/// radius <= 0 means "use the largest R_e of the arrangement".
BoundingBox bounding_halfwidth(const MatroidView& matroid, GroundSubset within, double radius = 0.0);
BoundingBox bounding_halfwidth(const MatroidView& matroid);

/// Kolmogorov-Smirnov statistic sup |F_n - F| of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Asymptotic critical value c_alpha / sqrt(n), c_alpha = sqrt(-ln(alpha/2)/2).
double ks_critical(double alpha, std::size_t n);
/// CDF of the norm of a uniform point of B^m: r^m.
double ball_radial_cdf(int m, double r);
/// CDF of one coordinate of a uniform point of B^m.
double ball_axis_cdf(int m, double t);

/// Goodness of fit of the Archimedes projection: samples N sphere points in
/// S^{D-1}, projects to y, and runs KS tests on ||y|| and on y_1.
struct ArchimedesTest {
  int D = 0;
  std::size_t samples = 0;
  double ks_radial = 0.0;
  double ks_axis = 0.0;
  double critical = 0.0;
  bool pass = false;
};
ArchimedesTest archimedes_uniformity_test(int D, std::size_t samples, std::uint64_t seed, double alpha);

}  // namespace dimred
