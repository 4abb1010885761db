#include <doctest.h>

#include <numbers>

#include "dimred/errors.hpp"
#include "dimred/geometry.hpp"

using namespace dimred;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("sphere and ball constants") {
  CHECK(sphere_area(1) == doctest::Approx(2.0));
  CHECK(sphere_area(2) == doctest::Approx(2 * pi));
  CHECK(sphere_area(3) == doctest::Approx(4 * pi));
  CHECK(ball_volume(0) == doctest::Approx(1.0));
  CHECK(ball_volume(2) == doctest::Approx(pi));
  CHECK(ball_volume(3) == doctest::Approx(4 * pi / 3));
  for (int D = 3; D <= 9; ++D) CHECK(sphere_area(D) == doctest::Approx(2 * pi * ball_volume(D - 2)).epsilon(1e-13));
}

TEST_CASE("S^0 draws are +-1 with equal probability") {
  RngStream rng(1, 0);
  const int n = 100000;
  int plus = 0;
  for (int k = 0; k < n; ++k) {
    const auto p = sample_unit_sphere(1, rng);
    REQUIRE(std::abs(p[0]) == 1.0);
    plus += p[0] > 0;
  }
  CHECK(std::abs(plus - n / 2) < 4 * std::sqrt(n / 4.0));
}

TEST_CASE("circle samples have mean zero and unit norm") {
  RngStream rng(2, 0);
  const int n = 1000000;
  double sx = 0;
  double sy = 0;
  double worst = 0;
  std::vector<double> p(2);
  for (int k = 0; k < n; ++k) {
    sample_unit_sphere(2, rng, p);
    sx += p[0];
    sy += p[1];
    worst = std::max(worst, std::abs(std::hypot(p[0], p[1]) - 1.0));
  }
  const double sigma = std::sqrt(0.5 / n);
  CHECK(std::abs(sx / n) < 4 * sigma);
  CHECK(std::abs(sy / n) < 4 * sigma);
  CHECK(worst < 1e-12);
}

TEST_CASE("S^3 coordinates have variance 1/4") {
  RngStream rng(3, 0);
  const int n = 400000;
  std::vector<double> p(4);
  std::array<double, 4> s{};
  for (int k = 0; k < n; ++k) {
    sample_unit_sphere(4, rng, p);
    for (int c = 0; c < 4; ++c) s[static_cast<std::size_t>(c)] += p[static_cast<std::size_t>(c)] * p[static_cast<std::size_t>(c)];
  }
  // x^2 has mean 1/4 and variance E x^4 - 1/16 = 1/8 - 1/16.
  const double sigma = 0.25 / std::sqrt(n);
  for (double v : s) CHECK(std::abs(v / n - 0.25) < 4 * sigma);
}

TEST_CASE("archimedes_split") {
  const std::vector<double> pole{0, 0, 0, 1};
  const auto s = archimedes_split(pole);
  CHECK(s.w == std::array<double, 2>{0, 0});
  CHECK(s.y == std::vector<double>{0, 1});
  CHECK_THROWS_AS(archimedes_split(std::vector<double>{1, 0}), PreconditionError);
}

TEST_CASE("D = 3 axis marginal is uniform on [-1, 1]") {
  RngStream rng(4, 0);
  const std::size_t n = 200000;
  std::vector<double> ys;
  std::vector<double> p(3);
  for (std::size_t k = 0; k < n; ++k) {
    sample_unit_sphere(3, rng, p);
    ys.push_back(archimedes_split(p).y[0]);
  }
  const double ks = ks_statistic(ys, [](double t) { return std::clamp(0.5 * (t + 1), 0.0, 1.0); });
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("D = 4 radial law is r^2") {
  RngStream rng(5, 0);
  const std::size_t n = 200000;
  std::vector<double> rs;
  std::vector<double> p(4);
  for (std::size_t k = 0; k < n; ++k) {
    sample_unit_sphere(4, rng, p);
    const auto y = archimedes_split(p).y;
    rs.push_back(std::hypot(y[0], y[1]));
  }
  CHECK(ks_statistic(rs, [](double r) { return ball_radial_cdf(2, r); }) < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("KS helpers") {
  CHECK(ks_statistic({0.5}, [](double t) { return t; }) == doctest::Approx(0.5));
  CHECK(ks_critical(0.05, 100) == doctest::Approx(0.1358).epsilon(1e-3));
  CHECK(ball_axis_cdf(1, 0.0) == doctest::Approx(0.5));
  CHECK(ball_axis_cdf(2, 0.0) == doctest::Approx(0.5));
  // Uniform disk: P(y1 <= t) = 1/2 + (t sqrt(1-t^2) + asin t) / pi.
  for (double t : {-0.9, -0.3, 0.2, 0.7})
    CHECK(ball_axis_cdf(2, t) == doctest::Approx(0.5 + (t * std::sqrt(1 - t * t) + std::asin(t)) / pi));
  // Uniform 3-ball: P(y1 <= t) = (2 + 3t - t^3) / 4.
  for (double t : {-0.5, 0.1, 0.8}) CHECK(ball_axis_cdf(3, t) == doctest::Approx((2 + 3 * t - t * t * t) / 4));
  CHECK(ball_radial_cdf(3, 0.5) == doctest::Approx(0.125));
}

TEST_CASE("Archimedes uniformity test passes at small N") {
  for (int D : {3, 4, 5}) {
    const auto t = archimedes_uniformity_test(D, 50000, 7, 1e-3);
    CHECK(t.pass);
    CHECK(t.critical == doctest::Approx(ks_critical(1e-3, 50000)));
  }
  CHECK_THROWS_AS(archimedes_uniformity_test(2, 10, 0, 1e-3), PreconditionError);
}

TEST_CASE("surface totals") {
  CHECK(surface_measure_total(AsaShape::sphere(3)) == doctest::Approx(4 * pi));
  CHECK(surface_measure_total(AsaShape::sphere(2)) == doctest::Approx(2 * pi));
  CHECK(surface_measure_total(AsaShape::cylinder(3, 2.0)) == doctest::Approx(4 * pi));
  CHECK(surface_measure_total(AsaShape::capped_cylinder(3, 1.0)) == doctest::Approx(2 * pi + 4 * pi));
  // Archimedean identity: total measure = 2 pi * bottom volume.
  for (int D = 3; D <= 6; ++D)
    for (const AsaShape& s : {AsaShape::sphere(D), AsaShape::cylinder(D, 1.5), AsaShape::capped_cylinder(D, 0.7)})
      CHECK(surface_measure_total(s) == doctest::Approx(2 * pi * s.bottom_volume()).epsilon(1e-13));
}

TEST_CASE("ASA shapes") {
  CHECK_THROWS_AS(AsaShape::sphere(1), PreconditionError);
  CHECK_THROWS_AS(AsaShape::cylinder(2, 1.0), PreconditionError);
  CHECK_THROWS_AS(AsaShape::cylinder(3, 0.0), PreconditionError);

  const AsaShape cyl = AsaShape::cylinder(3, 1.0);
  CHECK(cyl.in_bottom(std::vector<double>{0.5}));
  CHECK_FALSE(cyl.in_bottom(std::vector<double>{0.6}));
  CHECK(cyl.bottom_volume() == doctest::Approx(1.0));
  CHECK(cyl.inside_solid(std::vector<double>{0.5, 0.5, 0.2}));
  CHECK_FALSE(cyl.inside_solid(std::vector<double>{0.8, 0.8, 0.2}));

  const AsaShape cap = AsaShape::capped_cylinder(5, 1.0);
  CHECK(cap.bottom_volume() == doctest::Approx(pi * 1.0 + 4 * pi / 3));
  CHECK(cap.in_bottom(std::vector<double>{0, 0, 1.4}));
  CHECK_FALSE(cap.in_bottom(std::vector<double>{0, 0, 1.6}));
  CHECK(cap.bottom_radius() == doctest::Approx(1.5));

  const AsaShape sph = AsaShape::sphere(4);
  CHECK(sph.warp_sq(std::vector<double>{0.6, 0}) == doctest::Approx(0.64));
  CHECK_FALSE(sph.in_bottom(std::vector<double>{0.8, 0.8}));
}

TEST_CASE("ASA surface samples lie on the surface") {
  RngStream rng(6, 0);
  for (const AsaShape& s : {AsaShape::sphere(3), AsaShape::sphere(5), AsaShape::cylinder(4, 2.0),
                            AsaShape::capped_cylinder(3, 1.0), AsaShape::capped_cylinder(5, 0.5)}) {
    std::vector<double> p(static_cast<std::size_t>(s.dim()));
    for (int k = 0; k < 2000; ++k) {
      s.sample_surface(rng, p);
      const auto y = std::span<const double>(p).subspan(2);
      REQUIRE(s.in_bottom(y));
      REQUIRE(std::abs(p[0] * p[0] + p[1] * p[1] - s.warp_sq(y)) < 1e-12);
      double r = 0;
      for (double v : y) r += v * v;
      REQUIRE(std::sqrt(r) <= s.bottom_radius() + 1e-12);
    }
  }
}

TEST_CASE("sphere surface samples are uniform on the sphere") {
  // For the sphere ASA, the sampler and the Gaussian method agree in law;
  // compare the last coordinate against the uniform law on [-1, 1] at D = 3.
  RngStream rng(8, 0);
  const AsaShape s = AsaShape::sphere(3);
  std::vector<double> p(3);
  std::vector<double> t;
  for (int k = 0; k < 100000; ++k) {
    s.sample_surface(rng, p);
    REQUIRE(std::abs(std::hypot(p[0], p[1], p[2]) - 1.0) < 1e-12);
    t.push_back(p[0]);
  }
  CHECK(ks_statistic(t, [](double v) { return std::clamp(0.5 * (v + 1), 0.0, 1.0); }) < 1.63 / std::sqrt(1e5));
}

TEST_CASE("bounding box examples") {
  CHECK(bounding_halfwidth(MatroidView(Arrangement::braid(2))).half_width == doctest::Approx(1.0));
  CHECK(bounding_halfwidth(MatroidView(Arrangement::coxeter_d(2))).half_width == doctest::Approx(1.0));
  CHECK(bounding_halfwidth(MatroidView(Arrangement::braid(3))).half_width == doctest::Approx(2.0));
  const MatroidView r(Arrangement::braid(3).with_radii(std::vector<double>{1, 2, 5}));
  CHECK(bounding_halfwidth(r).half_width == doctest::Approx(10.0));
  CHECK(BoundingBox{1.5}.volume(2) == doctest::Approx(9.0));
  CHECK_THROWS_AS(bounding_halfwidth(r, GroundSubset::of({0})), PreconditionError);
}

TEST_CASE("rank-n regions never leave the bounding box") {
  for (const Arrangement& arr : {Arrangement::braid(3), Arrangement::coxeter_b(2), Arrangement::coxeter_d(2),
                                 Arrangement::braid(4)}) {
    const MatroidView m(arr);
    const double M = bounding_halfwidth(m).half_width;
    RngStream rng(9, 0);
    const int d = 2;
    std::vector<double> x(static_cast<std::size_t>(arr.dim() * d));
    for (int trial = 0; trial < 500000; ++trial) {
      for (auto& v : x) v = rng.uniform(-2 * M, 2 * M);
      if (!m.is_spanning(arr.gamma_of(x, d))) continue;
      for (double v : x) REQUIRE(std::abs(v) <= M);
    }
  }
}
