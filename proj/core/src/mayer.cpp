#include "dimred/mayer.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace dimred {

namespace {

double max_radius_within(const Arrangement& arr, GroundSubset s) {
  double r = 0.0;
  for (int e : s.elements()) r = std::max(r, arr.hyperplane(e).radius);
  return r;
}

double max_bottom_radius(std::span<const AsaShape> shapes, GroundSubset s) {
  double r = 0.0;
  for (int e : s.elements()) r = std::max(r, shapes[static_cast<std::size_t>(e)].bottom_radius());
  return r;
}

bool inside(const Arrangement& arr, int e, std::span<const double> x, int d, const AsaShape* shape,
            std::span<double> h) {
  if (shape == nullptr) {
    const double r = arr.hyperplane(e).radius;
    return arr.norm_sq(e, x, d) <= r * r;
  }
  arr.evaluate_into(e, x, d, h);
  return shape->in_bottom(h);
}

void require_mc_dim(const Arrangement& arr, int d, const char* op) {
  arr.check_point_dim(d);
  if (d < 1) throw PreconditionError(std::string(op) + ": Monte Carlo path needs d >= 1");
}

void require_spanning(const MatroidView& matroid, GroundSubset H, const char* op) {
  if (!H.is_subset_of(matroid.ground_set())) throw PreconditionError(std::string(op) + ": subset outside ground set");
  if (!matroid.is_spanning(H))
    throw PreconditionError(std::string(op) + ": H has rank " + std::to_string(matroid.rank_of(H)) +
                            " < " + std::to_string(matroid.rank()) + "; not spanning, the integral diverges");
}

// Volume of {x in box : h_e(x) inside for all e in H}, with sign (-1)^{|H|}.
MCEstimate signed_overlap(const MatroidView& matroid, GroundSubset H, int d, std::span<const AsaShape> shapes,
                          const RunOptions& opts) {
  const Arrangement& arr = matroid.arrangement();
  const int n = arr.dim();
  const double radius = shapes.empty() ? max_radius_within(arr, H) : max_bottom_radius(shapes, H);
  const BoundingBox box = bounding_halfwidth(matroid, H, radius);
  const double M = box.half_width;
  const std::vector<int> elems = H.elements();
  auto body = [&](RngStream& rng, std::uint64_t count, Accumulator& acc) {
    std::vector<double> x(static_cast<std::size_t>(n * d));
    std::vector<double> h(static_cast<std::size_t>(d));
    for (std::uint64_t s = 0; s < count; ++s) {
      for (double& v : x) v = rng.uniform(-M, M);
      bool all = true;
      for (int e : elems) {
        const AsaShape* shape = shapes.empty() ? nullptr : &shapes[static_cast<std::size_t>(e)];
        if (!inside(arr, e, x, d, shape, h)) {
          all = false;
          break;
        }
      }
      acc.add(all ? 1.0 : 0.0);
    }
  };
  const double sign = (H.size() % 2 == 0) ? 1.0 : -1.0;
  return estimate_chunked(opts, body).scaled(sign * box.volume(n * d));
}

}  // namespace

std::string to_string(ProjectionFn g) {
  switch (g) {
    case ProjectionFn::const1: return "const1";
    case ProjectionFn::norm_sq: return "norm_sq";
    case ProjectionFn::indicator_halfspace: return "indicator_halfspace";
  }
  return "unknown";
}

ProjectionFn parse_projection(const std::string& text) {
  for (ProjectionFn g : {ProjectionFn::const1, ProjectionFn::norm_sq, ProjectionFn::indicator_halfspace})
    if (to_string(g) == text) return g;
  throw PreconditionError("unknown projection function '" + text +
                          "' (expected const1, norm_sq or indicator_halfspace)");
}

double apply_projection(ProjectionFn g, std::span<const double> y, int n, int d) {
  switch (g) {
    case ProjectionFn::const1: return 1.0;
    case ProjectionFn::norm_sq: {
      double s = 0.0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n * d); ++i) s += y[i] * y[i];
      return s;
    }
    case ProjectionFn::indicator_halfspace: return (d > 0 && y[0] > 0.0) ? 1.0 : 0.0;
  }
  return 0.0;
}

double SubsetCache::get(GroundSubset s) {
  {
    std::shared_lock lock(mutex_);
    const auto it = values_.find(s.bits);
    if (it != values_.end()) return it->second;
  }
  const double v = compute_(s);
  std::unique_lock lock(mutex_);
  values_.emplace(s.bits, v);
  return v;
}

std::size_t SubsetCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

MCEstimate gamma_integral(const MatroidView& matroid, int d, const RegionIntegrand& integrand,
                          const RunOptions& opts) {
  const Arrangement& arr = matroid.arrangement();
  require_mc_dim(arr, d, "gamma_integral");
  std::span<const AsaShape> shapes;
  if (integrand.shapes) {
    check_shapes(matroid, *integrand.shapes, d);
    shapes = *integrand.shapes;
  }
  const int n = arr.dim();
  const int m = arr.size();
  const GroundSubset all = matroid.ground_set();
  const double radius = shapes.empty() ? arr.max_radius() : max_bottom_radius(shapes, all);
  const BoundingBox box = bounding_halfwidth(matroid, all, radius);
  const double M = box.half_width;
  const LinearOrder order = integrand.order.value_or(LinearOrder::identity(m));
  if (order.size() != m) throw PreconditionError("gamma_integral: order size differs from ground set");

  SubsetCache cache([&](GroundSubset g) -> double {
    if (!matroid.is_spanning(g)) return 0.0;
    if (integrand.weight == RegionIntegrand::Weight::chi) return static_cast<double>(matroid.chi_at_zero(g));
    return static_cast<double>(matroid.safe_base_count(g, order));
  });

  auto body = [&](RngStream& rng, std::uint64_t count, Accumulator& acc) {
    std::vector<double> x(static_cast<std::size_t>(n * d));
    std::vector<double> h(static_cast<std::size_t>(d));
    std::unordered_map<std::uint64_t, double> local;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (double& v : x) v = rng.uniform(-M, M);
      GroundSubset g;
      for (int e = 0; e < m; ++e) {
        const AsaShape* shape = shapes.empty() ? nullptr : &shapes[static_cast<std::size_t>(e)];
        if (inside(arr, e, x, d, shape, h)) g = g.with(e);
      }
      auto it = local.find(g.bits);
      if (it == local.end()) it = local.emplace(g.bits, cache.get(g)).first;
      const double w = it->second;
      if (w == 0.0) {
        acc.add(0.0);
        continue;
      }
      const double gy = apply_projection(integrand.g, x, n, d);
      if (!std::isfinite(gy)) throw PreconditionError("projection function is not finite on a sample");
      acc.add(w * gy);
    }
  };
  return estimate_chunked(opts, body).scaled(box.volume(n * d));
}

long long mmc_d0(const MatroidView& matroid, GroundSubset H) {
  require_spanning(matroid, H, "mmc_d0");
  return H.size() % 2 == 0 ? 1 : -1;
}

MCEstimate mmc_mc(const MatroidView& matroid, GroundSubset H, int d, const RunOptions& opts) {
  require_mc_dim(matroid.arrangement(), d, "mmc_mc");
  require_spanning(matroid, H, "mmc_mc");
  return signed_overlap(matroid, H, d, {}, opts);
}

MCEstimate pressure_coefficient(const MatroidView& matroid, int d, const RunOptions& opts) {
  validate(opts);
  matroid.arrangement().check_point_dim(d);
  if (d == 0) return MCEstimate::exact(static_cast<double>(matroid.chi_at_zero()), opts.seed, opts.workers);
  return gamma_integral(matroid, d, RegionIntegrand{}, opts);
}

MCEstimate pressure_coefficient_by_enumeration(const MatroidView& matroid, int d, const RunOptions& opts) {
  validate(opts);
  matroid.arrangement().check_point_dim(d);
  const auto spanning = matroid.spanning_subsets();
  if (d == 0) {
    long long total = 0;
    for (GroundSubset H : spanning) total += mmc_d0(matroid, H);
    return MCEstimate::exact(static_cast<double>(total), opts.seed, opts.workers);
  }
  MCEstimate total = MCEstimate::exact(0.0, opts.seed, opts.workers);
  for (std::size_t k = 0; k < spanning.size(); ++k) {
    RunOptions sub = opts;
    sub.stream_base = opts.stream_base + k * kCaseStride;
    total = total.add_independent(mmc_mc(matroid, spanning[k], d, sub));
  }
  return total;
}

void check_shapes(const MatroidView& matroid, std::span<const AsaShape> shapes, int d) {
  if (static_cast<int>(shapes.size()) != matroid.size())
    throw DimensionMismatch("expected one ASA shape per hyperplane (" + std::to_string(matroid.size()) + "), got " +
                            std::to_string(shapes.size()));
  for (const auto& s : shapes)
    if (s.dim() != d + 2)
      throw DimensionMismatch("ASA shape " + s.name() + " has dimension " + std::to_string(s.dim()) +
                              ", expected d + 2 = " + std::to_string(d + 2));
}

MCEstimate mmc_asa(const MatroidView& matroid, GroundSubset H, std::span<const AsaShape> shapes, int d,
                   const RunOptions& opts) {
  check_shapes(matroid, shapes, d);
  require_mc_dim(matroid.arrangement(), d, "mmc_asa");
  require_spanning(matroid, H, "mmc_asa");
  return signed_overlap(matroid, H, d, shapes, opts);
}

MCEstimate pressure_asa(const MatroidView& matroid, std::span<const AsaShape> shapes, int d,
                        const RunOptions& opts) {
  RegionIntegrand integrand;
  integrand.shapes = std::vector<AsaShape>(shapes.begin(), shapes.end());
  return gamma_integral(matroid, d, integrand, opts);
}

}  // namespace dimred
