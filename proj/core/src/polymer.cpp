#include "dimred/polymer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>

namespace dimred {

namespace {

std::vector<double> resolve_radii(const Arrangement& arr, std::span<const double> radii) {
  if (radii.empty()) return arr.radii();
  if (static_cast<int>(radii.size()) != arr.size())
    throw DimensionMismatch("expected " + std::to_string(arr.size()) + " radii, got " + std::to_string(radii.size()));
  for (double r : radii)
    if (!(r > 0.0) || !std::isfinite(r)) throw PreconditionError("radii must be positive and finite");
  return {radii.begin(), radii.end()};
}

void require_polymer_dim(const Arrangement& arr, int D) {
  if (D < 2) throw PreconditionError("polymer dimension D must be >= 2, got " + std::to_string(D));
  arr.check_point_dim(D);
}

// Sampling rule shared by the ball and ASA polymers.
struct Kernel {
  const Arrangement* arr = nullptr;
  int D = 0;
  std::vector<double> radii;
  std::span<const double> rotation;
  std::span<const AsaShape> shapes;
  double det_power = 0.0;

  double base_weight(const BaseSystem& sys) const {
    const double jac = det_power == 0.0 ? 1.0 : std::pow(sys.abs_det(), -det_power);
    if (shapes.empty()) return jac * std::pow(sphere_area(D), arr->dim());
    double w = jac;
    for (int e : sys.elements()) w *= surface_measure_total(shapes[static_cast<std::size_t>(e)]);
    return w;
  }

  void draw_target(RngStream& rng, int e, std::span<double> t, std::span<double> tmp) const {
    if (!shapes.empty()) {
      shapes[static_cast<std::size_t>(e)].sample_surface(rng, t);
      return;
    }
    const double r = radii[static_cast<std::size_t>(e)];
    if (rotation.empty()) {
      sample_unit_sphere(D, rng, t);
      for (double& v : t) v *= r;
      return;
    }
    sample_unit_sphere(D, rng, tmp);
    for (int a = 0; a < D; ++a) {
      double s = 0.0;
      for (int b = 0; b < D; ++b) s += rotation[static_cast<std::size_t>(a * D + b)] * tmp[static_cast<std::size_t>(b)];
      t[static_cast<std::size_t>(a)] = r * s;
    }
  }

  bool outside(int e, std::span<double> h, std::span<const double> x) const {
    if (shapes.empty()) {
      const double r = radii[static_cast<std::size_t>(e)];
      return arr->norm_sq(e, x, D) > r * r;
    }
    arr->evaluate_into(e, x, D, h);
    return !shapes[static_cast<std::size_t>(e)].inside_solid(h);
  }
};

struct Buffers {
  std::vector<double> targets;
  std::vector<double> x;
  std::vector<double> h;
  std::vector<double> tmp;
  std::vector<double> y;

  Buffers(int n, int D)
      : targets(static_cast<std::size_t>(n * D)),
        x(static_cast<std::size_t>(n * D)),
        h(static_cast<std::size_t>(D)),
        tmp(static_cast<std::size_t>(D)),
        y(static_cast<std::size_t>(n * std::max(D - 2, 0))) {}
};

bool draw(const Kernel& k, const BaseSystem& sys, const std::vector<int>& outside_elems, RngStream& rng,
          Buffers& buf) {
  const std::size_t D = static_cast<std::size_t>(k.D);
  const auto& elems = sys.elements();
  for (std::size_t p = 0; p < elems.size(); ++p)
    k.draw_target(rng, elems[p], std::span<double>(buf.targets).subspan(p * D, D), buf.tmp);
  sys.solve(buf.targets, k.D, buf.x);
  for (int e : outside_elems)
    if (!k.outside(e, buf.h, buf.x)) return false;
  return true;
}

// Sum over bases of weight(S) * E[accepted * g(y)], budget split equally.
MCEstimate polymer_sum(const MatroidView& matroid, const Kernel& kernel, const RunOptions& opts, ProjectionFn g) {
  validate(opts);
  const Arrangement& arr = matroid.arrangement();
  const int n = arr.dim();
  const int D = kernel.D;
  const int d = D - 2;
  const auto bases = matroid.bases();
  const std::uint64_t per_base = std::max<std::uint64_t>(1, opts.n_samples / bases.size());
  MCEstimate total = MCEstimate::exact(0.0, opts.seed, opts.workers);
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const BaseSystem sys(arr, bases[b]);
    const std::vector<int> outside_elems = (matroid.ground_set() - bases[b]).elements();
    RunOptions sub = opts;
    sub.n_samples = per_base;
    sub.stream_base = opts.stream_base + b * kBaseStride;
    auto body = [&](RngStream& rng, std::uint64_t count, Accumulator& acc) {
      Buffers buf(n, D);
      for (std::uint64_t s = 0; s < count; ++s) {
        if (!draw(kernel, sys, outside_elems, rng, buf)) {
          acc.add(0.0);
          continue;
        }
        if (g == ProjectionFn::const1) {
          acc.add(1.0);
          continue;
        }
        for (int i = 0; i < n; ++i)
          for (int c = 0; c < d; ++c)
            buf.y[static_cast<std::size_t>(i * d + c)] = buf.x[static_cast<std::size_t>(i * D + 2 + c)];
        const double gy = apply_projection(g, buf.y, n, d);
        if (!std::isfinite(gy)) throw PreconditionError("projection function is not finite on a sample");
        acc.add(gy);
      }
    };
    total = total.add_independent(estimate_chunked(sub, body).scaled(kernel.base_weight(sys)));
  }
  total.seed = opts.seed;
  total.workers = opts.workers;
  return total;
}

Kernel ball_kernel(const Arrangement& arr, int D, std::span<const double> radii, std::span<const double> rotation) {
  require_polymer_dim(arr, D);
  if (!rotation.empty() && rotation.size() != static_cast<std::size_t>(D * D))
    throw DimensionMismatch("rotation must be a D x D matrix");
  Kernel k;
  k.arr = &arr;
  k.D = D;
  k.radii = resolve_radii(arr, radii);
  k.rotation = rotation;
  return k;
}

}  // namespace

BaseSystem::BaseSystem(const Arrangement& arr, GroundSubset base)
    : base_(base), elements_(base.elements()), n_(arr.dim()), complex_(!arr.complexified()) {
  if (static_cast<int>(elements_.size()) != n_) throw PreconditionError("BaseSystem: subset is not a base");
  // Rows of the inverse combine base constraints into coordinates: x_i =
  // sum_k inv(i, k) t_k.
  const ExactMatrix A = arr.normal_matrix(base);
  abs_det_ = std::abs(determinant(A).to_complex());
  const ExactMatrix inv = inverse(A);
  inverse_.resize(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      inverse_[static_cast<std::size_t>(i * n_ + k)] =
          inv(static_cast<std::size_t>(i), static_cast<std::size_t>(k)).to_complex();
}

void BaseSystem::solve(std::span<const double> targets, int D, std::span<double> x) const {
  const std::size_t Dz = static_cast<std::size_t>(D);
  std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n_) * Dz), 0.0);
  for (int i = 0; i < n_; ++i) {
    double* xi = x.data() + static_cast<std::size_t>(i) * Dz;
    for (int k = 0; k < n_; ++k) {
      const std::complex<double> a = inverse_[static_cast<std::size_t>(i * n_ + k)];
      if (a == 0.0) continue;
      const double* tk = targets.data() + static_cast<std::size_t>(k) * Dz;
      if (!complex_) {
        for (std::size_t c = 0; c < Dz; ++c) xi[c] += a.real() * tk[c];
        continue;
      }
      for (std::size_t q = 0; q + 1 < Dz; q += 2) {
        const std::complex<double> z = a * std::complex<double>(tk[q], tk[q + 1]);
        xi[q] += z.real();
        xi[q + 1] += z.imag();
      }
    }
  }
}

PolymerSample sample_for_base(const MatroidView& matroid, GroundSubset base, int D, std::span<const double> radii,
                              RngStream& rng) {
  const Arrangement& arr = matroid.arrangement();
  if (!matroid.is_base(base)) throw PreconditionError("sample_for_base: S is not a base");
  const Kernel k = ball_kernel(arr, D, radii, {});
  const BaseSystem sys(arr, base);
  const std::vector<int> outside_elems = (matroid.ground_set() - base).elements();
  Buffers buf(arr.dim(), D);
  PolymerSample s;
  s.base = base;
  s.D = D;
  s.accepted = draw(k, sys, outside_elems, rng, buf);
  s.x = buf.x;
  s.directions = buf.targets;
  const auto elems = sys.elements();
  for (std::size_t p = 0; p < elems.size(); ++p) {
    const double r = k.radii[static_cast<std::size_t>(elems[p])];
    for (int c = 0; c < D; ++c) s.directions[p * static_cast<std::size_t>(D) + static_cast<std::size_t>(c)] /= r;
  }
  return s;
}

SampleCheck check_sample(const Arrangement& arr, const PolymerSample& sample, std::span<const double> radii) {
  const std::vector<double> r = resolve_radii(arr, radii);
  SampleCheck out;
  out.disjoint = true;
  for (int e = 0; e < arr.size(); ++e) {
    const double norm = std::sqrt(arr.norm_sq(e, sample.x, sample.D));
    const double re = r[static_cast<std::size_t>(e)];
    if (sample.base.contains(e))
      out.link_residual = std::max(out.link_residual, std::abs(norm - re));
    else if (!(norm > re))
      out.disjoint = false;
  }
  return out;
}

MCEstimate volume_mc(const MatroidView& matroid, int D, std::span<const double> radii, const RunOptions& opts,
                     std::span<const double> rotation) {
  const Kernel k = ball_kernel(matroid.arrangement(), D, radii, rotation);
  return polymer_sum(matroid, k, opts, ProjectionFn::const1);
}

bool is_unimodular(const MatroidView& matroid) {
  const Arrangement& arr = matroid.arrangement();
  for (GroundSubset b : matroid.bases())
    if (std::abs(std::abs(determinant(arr.normal_matrix(b)).to_complex()) - 1.0) > 1e-12) return false;
  return true;
}

MCEstimate volume_mc_config_measure(const MatroidView& matroid, int D, const RunOptions& opts) {
  Kernel k = ball_kernel(matroid.arrangement(), D, {}, {});
  k.det_power = D - 2;
  return polymer_sum(matroid, k, opts, ProjectionFn::const1);
}

InvarianceReport planar_invariance_check(const MatroidView& matroid, const std::vector<std::vector<double>>& radii_list,
                                         const RunOptions& opts) {
  InvarianceReport rep;
  const int n = matroid.rank();
  rep.expected = std::pow(2.0 * std::numbers::pi, n) * std::abs(static_cast<double>(matroid.chi_at_zero()));
  rep.radii = radii_list;
  const MCEstimate exact = MCEstimate::exact(rep.expected);
  bool ok = true;
  for (std::size_t k = 0; k < radii_list.size(); ++k) {
    RunOptions sub = opts;
    sub.stream_base = opts.stream_base + k * kCaseStride;
    rep.estimates.push_back(volume_mc(matroid, 2, radii_list[k], sub));
    rep.z_expected.push_back(z_score(rep.estimates.back(), exact));
    ok = ok && std::abs(rep.z_expected.back()) < kZThreshold;
  }
  for (std::size_t a = 0; a < rep.estimates.size(); ++a)
    for (std::size_t b = a + 1; b < rep.estimates.size(); ++b) {
      const double z = z_score(rep.estimates[a], rep.estimates[b]);
      rep.pairs.push_back({a, b, z});
      ok = ok && std::abs(z) < kZThreshold;
    }
  rep.pass = ok;
  return rep;
}

ProjectionReport project_expectation(const MatroidView& matroid, int d, ProjectionFn g, const RunOptions& opts) {
  const Arrangement& arr = matroid.arrangement();
  if (!arr.complexified()) throw PreconditionError("project_expectation: arrangement must be complexified");
  if (d < 1) throw PreconditionError("project_expectation: d must be >= 1");
  if (!arr.unit_radii()) throw PreconditionError("project_expectation: radii must all be 1");
  ProjectionReport rep;
  const Kernel k = ball_kernel(arr, d + 2, {}, {});
  rep.polymer = polymer_sum(matroid, k, opts, g);
  RunOptions side = opts;
  side.stream_base = opts.stream_base + kSideStride;
  RegionIntegrand integrand;
  integrand.g = g;
  rep.mmc = gamma_integral(matroid, d, integrand, side).scaled(std::pow(-2.0 * std::numbers::pi, arr.dim()));
  return rep;
}

MCEstimate safe_projection_expectation(const MatroidView& matroid, int d, ProjectionFn g, const LinearOrder& order,
                                       const RunOptions& opts) {
  const Arrangement& arr = matroid.arrangement();
  if (!arr.complexified()) throw PreconditionError("safe_projection_expectation: arrangement must be complexified");
  RegionIntegrand integrand;
  integrand.g = g;
  integrand.weight = RegionIntegrand::Weight::safe_count;
  integrand.order = order;
  return gamma_integral(matroid, d, integrand, opts).scaled(std::pow(2.0 * std::numbers::pi, arr.dim()));
}

MCEstimate asa_volume_mc(const MatroidView& matroid, std::span<const AsaShape> shapes, const RunOptions& opts) {
  if (shapes.empty()) throw DimensionMismatch("asa_volume_mc: no shapes given");
  const int D = shapes.front().dim();
  check_shapes(matroid, shapes, D - 2);
  const Arrangement& arr = matroid.arrangement();
  require_polymer_dim(arr, D);
  Kernel k;
  k.arr = &arr;
  k.D = D;
  k.radii = arr.radii();
  k.shapes = shapes;
  return polymer_sum(matroid, k, opts, ProjectionFn::const1);
}

std::vector<PolymerSample> draw_samples(const MatroidView& matroid, int D, std::span<const double> radii,
                                        std::size_t count, std::uint64_t seed) {
  const auto bases = matroid.bases();
  std::vector<PolymerSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    RngStream rng(seed, k);
    out.push_back(sample_for_base(matroid, bases[k % bases.size()], D, radii, rng));
  }
  return out;
}

void write_samples_csv(std::ostream& out, const std::vector<PolymerSample>& samples) {
  std::size_t width = 0;
  for (const auto& s : samples) width = std::max(width, s.x.size());
  out << "base,accepted";
  for (std::size_t c = 0; c < width; ++c) out << ",x" << c;
  out << '\n';
  out << std::setprecision(17);
  for (const auto& s : samples) {
    out << s.base.bits << ',' << (s.accepted ? 1 : 0);
    for (double v : s.x) out << ',' << v;
    out << '\n';
  }
}

void write_sample_svg(std::ostream& out, const Arrangement& arr, const PolymerSample& sample) {
  if (sample.D != 2) throw PreconditionError("write_sample_svg: only D = 2 configurations can be drawn");
  const int n = arr.dim();
  // The gauge point (origin) is drawn alongside the n free points.
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i)
    pts.emplace_back(sample.x[static_cast<std::size_t>(2 * i)], sample.x[static_cast<std::size_t>(2 * i + 1)]);
  pts.emplace_back(0.0, 0.0);
  double lo = -1.0;
  double hi = 1.0;
  for (auto [a, b] : pts) {
    lo = std::min({lo, a, b});
    hi = std::max({hi, a, b});
  }
  const double pad = 1.0;
  const double size = 400.0;
  const double scale = size / (hi - lo + 2 * pad);
  auto px = [&](double v) { return (v - lo + pad) * scale; };
  auto py = [&](double v) { return size - (v - lo + pad) * scale; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int e : sample.base.elements()) {
    int a = -1;
    int b = -1;
    int nonzero = 0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(arr.coefficient(e, i)) == 0.0) continue;
      ++nonzero;
      (a < 0 ? a : b) = i;
    }
    if (nonzero == 1) b = n;
    if (nonzero > 2 || a < 0) continue;
    const auto [x1, y1] = pts[static_cast<std::size_t>(a)];
    const auto [x2, y2] = pts[static_cast<std::size_t>(b)];
    out << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
        << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << "<circle cx=\"" << px(pts[i].first) << "\" cy=\"" << py(pts[i].second) << "\" r=\"" << 0.5 * scale
        << "\" fill=\"none\" stroke=\"" << (i + 1 == pts.size() ? "grey" : "steelblue") << "\"/>\n";
  out << "</svg>\n";
}

}  // namespace dimred
