#include "dimred/float_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace dimred {

namespace {

Eigen::MatrixXd to_eigen(const RealMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  return out;
}

Eigen::PartialPivLU<Eigen::MatrixXd> checked_lu(const RealMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) throw SingularSystem("float solve: basis must be square and non-empty");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(to_eigen(m));
  const double rcond = lu.rcond();
  if (!(rcond > 0.0) || 1.0 / rcond > kMaxConditionNumber)
    throw SingularSystem("float solve: basis is singular or ill-conditioned (rcond=" + std::to_string(rcond) + ")");
  return lu;
}

}  // namespace

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double condition_estimate(const RealMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) return std::numeric_limits<double>::infinity();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(to_eigen(m));
  const double rcond = lu.rcond();
  return rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

std::vector<double> solve_float(const RealMatrix& basis, std::span<const double> rhs) {
  if (rhs.size() != basis.rows) throw DimensionMismatch("solve_float: rhs length differs from basis size");
  const auto lu = checked_lu(basis);
  const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  const Eigen::VectorXd x = lu.solve(b);

  const Eigen::VectorXd residual = to_eigen(basis) * x - b;
  const double scale = b.size() > 0 ? b.lpNorm<Eigen::Infinity>() : 0.0;
  const double res = residual.size() > 0 ? residual.lpNorm<Eigen::Infinity>() : 0.0;
  if (res > 1e-9 * std::max(scale, std::numeric_limits<double>::min()) && res > 0.0)
    throw SingularSystem("solve_float: residual " + std::to_string(res) + " exceeds tolerance");
  return {x.data(), x.data() + x.size()};
}

RealMatrix invert_float(const RealMatrix& m) {
  const auto lu = checked_lu(m);
  const Eigen::MatrixXd inv = lu.inverse();
  RealMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = inv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

}  // namespace dimred
