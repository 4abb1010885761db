#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimred/exact.hpp"
#include "dimred/subset.hpp"

namespace dimred {

/// One hyperplane {x : h_e(x) = 0} of a central arrangement, with the
/// radius R_e used by polymer and Mayer integrands.
struct Hyperplane {
  int id = 0;
  std::string label;
  ExactVector normal;
  double radius = 1.0;
};

/// A point x in (R^d)^n, point-major. For cyclotomic arrangements d must be
/// even and each point is read as C^{d/2} with (re, im) pairs.
struct Configuration {
  int dim = 0;
  std::vector<double> coords;

  Configuration() = default;
  Configuration(int d, std::vector<double> c) : dim(d), coords(std::move(c)) {}

  int points() const { return dim == 0 ? 0 : static_cast<int>(coords.size()) / dim; }
  std::span<const double> point(int i) const {
    return std::span<const double>(coords).subspan(static_cast<std::size_t>(i * dim), static_cast<std::size_t>(dim));
  }
};

/// Central essential arrangement in K^n (K = Q or Q(zeta_k)). Immutable.
/// The hyperplane order is the construction order and serves as the
/// default linear order on the matroid ground set.
class Arrangement {
 public:
  /// Validates: non-empty, no zero normals, consistent lengths and field,
  /// positive radii, and essential (exact rank == dim). Throws
  /// ConstructionError otherwise.
  Arrangement(std::string name, FieldPtr field, int dim, std::vector<Hyperplane> hyperplanes);

  /// Braid arrangement on m points, gauge-fixed by x_m = 0 so it lives in
  /// R^{m-1}: normals x_i - x_j for i < j.
  static Arrangement braid(int m);
  /// Type D_n: x_i - x_j and x_i + x_j for i < j.
  static Arrangement coxeter_d(int n);
  /// Type B_n: the D_n normals followed by the coordinate hyperplanes x_l.
  static Arrangement coxeter_b(int n);
  /// Threshold arrangement: x_i + x_j for i < j.
  static Arrangement threshold(int n);
  /// Dowling arrangement: x_i - zeta^m x_j for i < j and 0 <= m < k.
  /// k = 1 and k = 2 are rational (complexified); k >= 3 is cyclotomic.
  static Arrangement dowling(int n, int k);
  /// Multi-colour Widom-Rowlinson arrangement: differences x_a - x_b for
  /// points of different colours, gauge-fixed by setting the last point to 0.
  static Arrangement widom_rowlinson(const std::vector<int>& colours);
  /// Rational arrangement from explicit normals.
  static Arrangement custom(const std::vector<std::vector<Rational>>& normals);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const FieldPtr& field() const { return field_; }
  /// True iff every functional has real (here: rational) coefficients.
  bool complexified() const { return field_->is_rational(); }
  const Hyperplane& hyperplane(int e) const { return hyperplanes_.at(static_cast<std::size_t>(e)); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  std::vector<double> radii() const;
  bool unit_radii() const;
  double max_radius() const;
  Arrangement with_radii(std::span<const double> radii) const;

  ExactMatrix normal_matrix(GroundSubset subset) const;
  std::vector<ExactVector> normals(GroundSubset subset) const;

  /// Float embedding of coefficient a_{e,i}.
  std::complex<double> coefficient(int e, int i) const {
    return coeff_[static_cast<std::size_t>(e * dim_ + i)];
  }
  /// Throws PreconditionError unless d is a valid real point dimension
  /// (d >= 0; even for cyclotomic arrangements).
  void check_point_dim(int d) const;

  /// h_e(x) in R^d (or C^{d/2} packed as R^d).
  std::vector<double> evaluate(int e, const Configuration& x) const;
  void evaluate_into(int e, std::span<const double> x, int d, std::span<double> out) const;
  double norm_sq(int e, std::span<const double> x, int d) const;

  /// G = {e : ||h_e(x)|| <= R_e}; the region Gamma_G containing x.
  GroundSubset gamma_of(const Configuration& x) const;
  GroundSubset gamma_of(std::span<const double> x, int d) const;

 private:
  std::string name_;
  FieldPtr field_;
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::complex<double>> coeff_;
};

/// Family tags of the arrangement descriptor.
enum class Family { braid, coxeter_d, coxeter_b, threshold, dowling, widom_rowlinson, custom };

std::string to_string(Family f);
Family parse_family(const std::string& text);

/// Serializable recipe for an Arrangement.
struct ArrangementSpec {
  Family family = Family::braid;
  int n = 2;
  std::optional<int> k;
  std::vector<int> colours;
  std::vector<double> radii;                       // empty -> all 1
  std::vector<std::vector<std::string>> normals;  // custom only

  Arrangement build() const;
};

}  // namespace dimred
