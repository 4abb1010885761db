#include "dimred/geometry.hpp"

#include <algorithm>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

namespace dimred {

double sphere_area(int D) {
  if (D < 1) throw PreconditionError("sphere_area: D must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, D / 2.0) / std::tgamma(D / 2.0);
}

double ball_volume(int m) {
  if (m < 0) throw PreconditionError("ball_volume: m must be >= 0");
  return std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
}

void sample_unit_sphere(int D, RngStream& rng, std::span<double> out) {
  if (D < 1) throw PreconditionError("sample_unit_sphere: D must be >= 1");
  if (D == 1) {
    out[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return;
  }
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (int c = 0; c < D; ++c) {
      out[static_cast<std::size_t>(c)] = rng.normal();
      norm_sq += out[static_cast<std::size_t>(c)] * out[static_cast<std::size_t>(c)];
    }
  } while (norm_sq < 1e-300);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (int c = 0; c < D; ++c) out[static_cast<std::size_t>(c)] *= inv;
}

std::vector<double> sample_unit_sphere(int D, RngStream& rng) {
  std::vector<double> p(static_cast<std::size_t>(std::max(D, 1)));
  sample_unit_sphere(D, rng, p);
  return p;
}

ArchimedesSplit archimedes_split(std::span<const double> point) {
  if (point.size() < 3) throw PreconditionError("archimedes_split: need D >= 3");
  ArchimedesSplit s;
  s.w = {point[0], point[1]};
  s.y.assign(point.begin() + 2, point.end());
  return s;
}

AsaShape::AsaShape(Kind kind, int dim, double length) : kind_(kind), dim_(dim), length_(length) {
  if (dim_ < (kind_ == Kind::sphere ? 2 : 3))
    throw PreconditionError("ASA shape needs ambient dimension D >= " + std::to_string(kind_ == Kind::sphere ? 2 : 3));
  if (kind_ != Kind::sphere && !(length_ > 0.0)) throw PreconditionError("ASA cylinder length must be positive");
}

AsaShape AsaShape::sphere(int D) { return AsaShape(Kind::sphere, D, 0.0); }
AsaShape AsaShape::cylinder(int D, double length) { return AsaShape(Kind::cylinder, D, length); }
AsaShape AsaShape::capped_cylinder(int D, double length) { return AsaShape(Kind::capped_cylinder, D, length); }

std::string AsaShape::name() const {
  switch (kind_) {
    case Kind::sphere: return "sphere(" + std::to_string(dim_) + ")";
    case Kind::cylinder: return "cylinder(" + std::to_string(dim_) + "," + std::to_string(length_) + ")";
    case Kind::capped_cylinder:
      return "capped_cylinder(" + std::to_string(dim_) + "," + std::to_string(length_) + ")";
  }
  return "?";
}

double AsaShape::warp_sq(std::span<const double> y) const {
  const std::size_t m = static_cast<std::size_t>(bottom_dim());
  double r2 = 0.0;
  if (kind_ == Kind::sphere) {
    for (std::size_t i = 0; i < m; ++i) r2 += y[i] * y[i];
    return 1.0 - r2;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) r2 += y[i] * y[i];
  const double t = std::abs(y[m - 1]);
  const double half = 0.5 * length_;
  if (kind_ == Kind::cylinder) return t <= half ? 1.0 - r2 : -1.0;
  const double over = std::max(t - half, 0.0);
  return 1.0 - r2 - over * over;
}

bool AsaShape::in_bottom(std::span<const double> y) const { return warp_sq(y) >= 0.0; }

double AsaShape::bottom_radius() const {
  const double half = 0.5 * length_;
  switch (kind_) {
    case Kind::sphere: return 1.0;
    case Kind::cylinder: return std::sqrt(1.0 + half * half);
    case Kind::capped_cylinder: return 1.0 + half;
  }
  return 0.0;
}

double AsaShape::bottom_volume() const {
  switch (kind_) {
    case Kind::sphere: return ball_volume(dim_ - 2);
    case Kind::cylinder: return ball_volume(dim_ - 3) * length_;
    case Kind::capped_cylinder: return ball_volume(dim_ - 3) * length_ + ball_volume(dim_ - 2);
  }
  return 0.0;
}

bool AsaShape::inside_solid(std::span<const double> p) const {
  const auto y = p.subspan(2);
  if (!in_bottom(y)) return false;
  return p[0] * p[0] + p[1] * p[1] <= warp_sq(y);
}

void AsaShape::sample_bottom(RngStream& rng, std::span<double> out) const {
  const std::size_t m = static_cast<std::size_t>(bottom_dim());
  if (m == 0) return;
  const double axis_half = kind_ == Kind::sphere ? 1.0
                           : kind_ == Kind::cylinder ? 0.5 * length_
                                                     : 0.5 * length_ + 1.0;
  do {
    for (std::size_t i = 0; i + 1 < m; ++i) out[i] = rng.uniform(-1.0, 1.0);
    out[m - 1] = rng.uniform(-axis_half, axis_half);
  } while (!in_bottom(out.first(m)));
}

void AsaShape::sample_surface(RngStream& rng, std::span<double> out) const {
  auto y = out.subspan(2, static_cast<std::size_t>(bottom_dim()));
  sample_bottom(rng, y);
  const double rho = std::sqrt(std::max(warp_sq(y), 0.0));
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  out[0] = rho * std::cos(theta);
  out[1] = rho * std::sin(theta);
}

double surface_measure_total(const AsaShape& shape) {
  const int D = shape.dim();
  switch (shape.kind()) {
    case AsaShape::Kind::sphere: return sphere_area(D);
    case AsaShape::Kind::cylinder: return sphere_area(D - 1) * shape.length();
    case AsaShape::Kind::capped_cylinder: return sphere_area(D - 1) * shape.length() + sphere_area(D);
  }
  return 0.0;
}

BoundingBox bounding_halfwidth(const MatroidView& matroid, GroundSubset within, double radius) {
  const Arrangement& arr = matroid.arrangement();
  if (radius <= 0.0) radius = arr.max_radius();
  double worst = 0.0;
  const auto bases = matroid.bases_within(within);
  if (bases.empty()) throw PreconditionError("bounding_halfwidth: subset contains no base");
  for (GroundSubset b : bases) {
    const ExactMatrix inv = inverse(arr.normal_matrix(b));
    for (std::size_t i = 0; i < inv.rows(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < inv.cols(); ++j) row += std::abs(inv(i, j).to_complex());
      worst = std::max(worst, row);
    }
  }
  return BoundingBox{worst * radius};
}

BoundingBox bounding_halfwidth(const MatroidView& matroid) {
  return bounding_halfwidth(matroid, matroid.ground_set());
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(-0.5 * std::log(0.5 * alpha)) / std::sqrt(static_cast<double>(n));
}

double ball_radial_cdf(int m, double r) {
  if (r <= 0.0) return 0.0;
  if (r >= 1.0) return 1.0;
  return std::pow(r, m);
}

double ball_axis_cdf(int m, double t) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (m == 1) return 0.5 * (t + 1.0);
  // P(|y_1| <= s) = I_{s^2}(1/2, (m+1)/2) for a uniform point of B^m.
  const double half = 0.5 * boost::math::ibeta(0.5, 0.5 * (m + 1), t * t);
  return t >= 0.0 ? 0.5 + half : 0.5 - half;
}

ArchimedesTest archimedes_uniformity_test(int D, std::size_t samples, std::uint64_t seed, double alpha) {
  if (D < 3) throw PreconditionError("archimedes_uniformity_test: need D >= 3");
  const int m = D - 2;
  RngStream rng(seed, 0);
  std::vector<double> point(static_cast<std::size_t>(D));
  std::vector<double> radial;
  std::vector<double> axis;
  radial.reserve(samples);
  axis.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    sample_unit_sphere(D, rng, point);
    const auto split = archimedes_split(point);
    double r2 = 0.0;
    for (double v : split.y) r2 += v * v;
    radial.push_back(std::sqrt(r2));
    axis.push_back(split.y[0]);
  }
  ArchimedesTest t;
  t.D = D;
  t.samples = samples;
  t.ks_radial = ks_statistic(std::move(radial), [m](double r) { return ball_radial_cdf(m, r); });
  t.ks_axis = ks_statistic(std::move(axis), [m](double v) { return ball_axis_cdf(m, v); });
  t.critical = ks_critical(alpha, samples);
  t.pass = t.ks_radial < t.critical && t.ks_axis < t.critical;
  return t;
}

}  // namespace dimred
