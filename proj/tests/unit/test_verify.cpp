#include <doctest.h>

#include <numbers>

#include "dimred/errors.hpp"
#include "dimred/verify.hpp"
#include "oracles.hpp"

using namespace dimred;

namespace {

constexpr double pi = std::numbers::pi;

RunOptions opts(std::uint64_t n, std::uint64_t seed) {
  RunOptions o;
  o.n_samples = n;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("check_dr examples") {
  const DRReport b2 = check_dr(MatroidView(Arrangement::braid(2)), 1, opts(100000, 1));
  CHECK(b2.lhs.mean == doctest::Approx(4 * pi));
  CHECK(b2.rhs.mean == doctest::Approx(4 * pi));
  CHECK(b2.z_score == 0.0);
  CHECK(b2.pass);

  const DRReport b3 = check_dr(MatroidView(Arrangement::braid(3)), 0, opts(300000, 2));
  CHECK(b3.lhs.mean == doctest::Approx(8 * pi * pi));
  CHECK(b3.lhs.std_error == 0.0);
  CHECK(b3.pass);
  CHECK(b3.unimodular);
  CHECK_FALSE(b3.rhs_config_measure.has_value());
}

TEST_CASE("check_dr reports z = (lhs - rhs) / combined stderr") {
  const DRReport r = check_dr(MatroidView(Arrangement::braid(3)), 1, opts(300000, 3));
  CHECK(r.z_score == doctest::Approx((r.lhs.mean - r.rhs.mean) / std::hypot(r.lhs.std_error, r.rhs.std_error)));
  CHECK(r.pass == (std::abs(r.z_score) < kZThreshold));
  CHECK(r.pass);
  CHECK(r.wall_time >= 0.0);
}

TEST_CASE("check_dr on unimodular-at-acceptance type B") {
  for (int d : {0, 1}) {
    const DRReport r = check_dr(MatroidView(Arrangement::coxeter_b(2)), d, opts(300000, 4 + d));
    CAPTURE(d);
    CHECK(r.pass);
  }
}

TEST_CASE("type D at d = 1 is off by |det|^d under the surface measure") {
  // Every D_2 base has |det| = 2 and no hyperplane outside it, so the polymer
  // side is (4 pi)^2 while (-2 pi)^2 times the Mayer sum is 8 pi^2.
  const DRReport r = check_dr(MatroidView(Arrangement::coxeter_d(2)), 1, opts(300000, 6));
  CHECK_FALSE(r.unimodular);
  CHECK(r.rhs.mean == doctest::Approx(16 * pi * pi));
  CHECK(std::abs(r.lhs.mean - 8 * pi * pi) < kZThreshold * r.lhs.std_error);
  CHECK_FALSE(r.pass);
  REQUIRE(r.rhs_config_measure.has_value());
  CHECK(std::abs(r.z_config_measure) < kZThreshold);

  const DRReport d0 = check_dr(MatroidView(Arrangement::coxeter_d(2)), 0, opts(100000, 7));
  CHECK(d0.pass);
}

TEST_CASE("check_dr preconditions") {
  const MatroidView scaled(Arrangement::braid(3).with_radii(std::vector<double>{1, 2, 1}));
  CHECK_THROWS_AS(check_dr(scaled, 1, opts(10, 0)), PreconditionError);
  CHECK_THROWS_AS(check_dr(MatroidView(Arrangement::dowling(2, 3)), 1, opts(10, 0)), PreconditionError);
}

TEST_CASE("hard-rod coefficients") {
  CHECK(tonks_coefficient(2) == -2);
  CHECK(tonks_coefficient(3) == 9);
  CHECK(tonks_coefficient(4) == -64);
  CHECK(static_cast<double>(tonks_coefficient(3)) == doctest::Approx(oracle::tonks_three_by_quadrature()));
}

TEST_CASE("Tonks table") {
  const TonksTable t = tonks_series_check(3, 1, opts(300000, 8));
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].estimate.mean == doctest::Approx(-2.0));
  CHECK(t.rows[1].expected == 9);
  CHECK(t.rows[1].polymer_expected == doctest::Approx(9 * 4 * pi * pi));
  CHECK(t.pass);
  CHECK_THROWS_AS(tonks_series_check(5, 1, opts(10, 0)), PreconditionError);
  CHECK_THROWS_AS(tonks_series_check(3, 2, opts(10, 0)), PreconditionError);
}

TEST_CASE("type D spanning sets two ways") {
  for (int n = 2; n <= 4; ++n) CHECK(typeD_spanning_sets_agree(n));
}

TEST_CASE("type D coefficient check") {
  const DRReport n2 = typeD_unbalanced_check(2, 0, opts(100000, 9));
  CHECK(n2.lhs.mean == 1.0);
  CHECK(n2.rhs.mean == doctest::Approx(1.0));
  CHECK(n2.pass);
  CHECK(n2.checks.size() == 2);
  for (const auto& [name, ok] : n2.checks) CHECK_MESSAGE(ok, name);

  const DRReport n3 = typeD_unbalanced_check(3, 0, opts(300000, 10));
  CHECK(n3.lhs.mean == static_cast<double>(MatroidView(Arrangement::coxeter_d(3)).chi_at_zero()));
  CHECK(n3.pass);

  const DRReport n2d1 = typeD_unbalanced_check(2, 1, opts(300000, 11));
  CHECK_FALSE(n2d1.pass);
  CHECK(std::abs(n2d1.z_config_measure) < kZThreshold);

  CHECK_THROWS_AS(typeD_unbalanced_check(4, 0, opts(10, 0)), PreconditionError);
}

TEST_CASE("balanced weight identity") {
  const BalancedWeightReport two = balanced_weight_check(2);
  CHECK(two.balanced == std::vector<long long>{1, 2});
  CHECK(two.unsigned_weighted == std::vector<long long>{1, 2});
  for (int n = 1; n <= 5; ++n) CHECK(balanced_weight_check(n).pass);
  CHECK_THROWS_AS(balanced_weight_check(6), PreconditionError);
}

TEST_CASE("balanced signed graph counts agree with cycle enumeration") {
  // Independent count for n <= 4: every pair in one of four states.
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t states = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) states *= 4;
    std::vector<long long> counts(pairs.size() * 2 + 1, 0);
    for (std::uint64_t code = 0; code < states; ++code) {
      std::vector<oracle::Edge> es;
      std::uint64_t c = code;
      for (std::size_t k = 0; k < pairs.size(); ++k, c /= 4) {
        if (c % 4 == 1 || c % 4 == 3) es.push_back({pairs[k].first, pairs[k].second, 1});
        if (c % 4 == 2 || c % 4 == 3) es.push_back({pairs[k].first, pairs[k].second, -1});
      }
      if (oracle::balanced_by_cycles(n, es)) ++counts[es.size()];
    }
    const BalancedWeightReport r = balanced_weight_check(n);
    for (std::size_t k = 0; k < counts.size(); ++k)
      CHECK(counts[k] == (k < r.balanced.size() ? r.balanced[k] : 0));
  }
}

TEST_CASE("ASA dimensional reduction") {
  const MatroidView b2(Arrangement::braid(2));
  const std::vector<AsaShape> cyl{AsaShape::cylinder(3, 1.0)};
  const DRReport c = check_asa_dr(b2, cyl, 1, opts(300000, 12));
  CHECK(c.rhs.mean == doctest::Approx(2 * pi));
  CHECK(c.pass);

  const std::vector<AsaShape> cap{AsaShape::capped_cylinder(3, 1.0)};
  const DRReport k = check_asa_dr(b2, cap, 1, opts(10000, 13));
  CHECK(k.lhs.mean == doctest::Approx(2 * pi * 3));
  CHECK(k.rhs.mean == doctest::Approx(2 * pi * 3));
  CHECK(k.pass);

  const std::vector<AsaShape> sph{AsaShape::sphere(3)};
  const DRReport s = check_asa_dr(b2, sph, 1, opts(10000, 14));
  const DRReport plain = check_dr(b2, 1, opts(10000, 14));
  CHECK(s.lhs.mean == doctest::Approx(plain.lhs.mean));
  CHECK(s.rhs.mean == doctest::Approx(plain.rhs.mean));

  CHECK_THROWS_AS(check_asa_dr(b2, cyl, 2, opts(10, 0)), DimensionMismatch);
}
