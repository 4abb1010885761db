#include <doctest.h>

#include "oracles.hpp"

// The oracles are checked against hand values before anything is compared
// with them.

TEST_CASE("oracle rank on small matrices") {
  CHECK(oracle::rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(oracle::rank({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}) == 2);
  CHECK(oracle::rank({}) == 0);
}

TEST_CASE("braid chi product and tree counts") {
  CHECK(oracle::braid_chi_product(2) == -1);
  CHECK(oracle::braid_chi_product(3) == 2);
  CHECK(oracle::braid_chi_product(4) == -6);
  CHECK(oracle::spanning_trees_complete(4) == 16);
  CHECK(oracle::spanning_trees_complete(5) == 125);
  CHECK(oracle::chi_by_subsets(oracle::braid_normals(4)) == -6);
}

TEST_CASE("cycle enumeration balance") {
  CHECK(oracle::balanced_by_cycles(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
  CHECK_FALSE(oracle::balanced_by_cycles(2, {{0, 1, 1}, {0, 1, -1}}));
  CHECK(oracle::balanced_by_cycles(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, 1}}));
  CHECK(oracle::count_balanced_signings(3, {{0, 1}, {1, 2}, {0, 2}}) == 4);
}

TEST_CASE("strip quadrature") {
  CHECK(oracle::strip_area_2d({{1, 0}, {0, 1}}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(oracle::strip_area_2d({{1, 0}, {0, 1}, {1, -1}}) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(oracle::strip_area_2d({{1, -1}, {1, 1}}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(oracle::tonks_three_by_quadrature() - 9.0) < 1e-9);
}
