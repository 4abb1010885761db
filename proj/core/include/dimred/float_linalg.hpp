#pragma once

// Floating-point solves for the geometry layer. Matroid questions never go
// through here; see exact.hpp.

#include <cstddef>
#include <span>
#include <vector>

#include "dimred/errors.hpp"

namespace dimred {

/// Condition-number ceiling for solve_float and FloatInverse.
inline constexpr double kMaxConditionNumber = 1e12;

/// Dense row-major real matrix.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  static RealMatrix identity(std::size_t n);

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Solves basis * x = rhs. Throws SingularSystem when the basis is not
/// square, is singular, or its estimated condition number exceeds
/// kMaxConditionNumber. The residual satisfies
/// ||basis*x - rhs||_inf <= 1e-9 * ||rhs||_inf or SingularSystem is thrown.
std::vector<double> solve_float(const RealMatrix& basis, std::span<const double> rhs);

/// Estimated 1-norm condition number (infinity if singular).
double condition_estimate(const RealMatrix& m);

/// Inverse of a square real matrix under the same conditioning contract as
/// solve_float.
RealMatrix invert_float(const RealMatrix& m);

}  // namespace dimred
