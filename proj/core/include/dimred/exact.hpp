#pragma once

// Exact scalars over Q and the cyclotomic fields Q(zeta_k), with the small
// amount of dense linear algebra the matroid layer needs (rank, inverse,
// incremental span tests).

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dimred/errors.hpp"

namespace dimred {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a reduced rational.
Rational parse_rational(const std::string& text);

/// Dense polynomial with rational coefficients, lowest degree first.
using RationalPoly = std::vector<Rational>;

/// k-th cyclotomic polynomial, computed by dividing x^k - 1 by Phi_d for
/// every proper divisor d of k. Monic, lowest degree first.
RationalPoly cyclotomic_polynomial(unsigned k);

/// Euler's totient.
unsigned euler_phi(unsigned k);

/// Descriptor of a scalar field: Q (k == 0) or Q(zeta_k) for k >= 1.
/// Instances are interned, so two fields are equal iff they are the same
/// object. Thread-safe.
class Field {
 public:
  static std::shared_ptr<const Field> rational();
  static std::shared_ptr<const Field> cyclotomic(unsigned k);

  bool is_rational() const { return k_ == 0; }
  unsigned k() const { return k_; }
  /// Dimension over Q of the power basis (phi(k), or 1 for Q).
  std::size_t degree() const { return modulus_.size() - 1; }
  const RationalPoly& modulus() const { return modulus_; }
  /// Principal embedding zeta = exp(2 pi i / k); 1 for Q.
  std::complex<double> zeta() const { return zeta_; }
  std::string name() const;

  Field(unsigned k, RationalPoly modulus);

 private:
  unsigned k_;
  RationalPoly modulus_;
  std::complex<double> zeta_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Element of Q or Q(zeta_k). The cyclotomic form stores the power-basis
/// coefficients of the unique representative of degree < phi(k); rationals
/// are kept canonical by GMP. Arithmetic between different fields throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar();  // rational zero
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(Rational value);  // NOLINT(google-explicit-constructor)
  /// Reduces an arbitrary polynomial in zeta modulo Phi_k.
  Scalar(FieldPtr field, RationalPoly coefficients);

  static Scalar zero(const FieldPtr& field);
  static Scalar one(const FieldPtr& field);
  /// zeta^power in Q(zeta_k); power may be negative.
  static Scalar zeta_power(const FieldPtr& field, long power);

  const FieldPtr& field() const { return field_; }
  const RationalPoly& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational_valued() const;
  /// Value of a rationally-valued element; throws otherwise.
  Rational as_rational() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  FieldPtr field_;
  RationalPoly coeffs_;
};

using ExactVector = std::vector<Scalar>;

/// Dense row-major matrix over a single exact field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldPtr& field);
  /// Builds from rows; all rows must have equal length and all entries
  /// must share one field (FieldMismatch otherwise).
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
  static ExactMatrix identity(std::size_t n, const FieldPtr& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  const FieldPtr& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactMatrix operator*(const ExactMatrix& other) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldPtr field_ = Field::rational();
  std::vector<Scalar> data_;
};

/// Exact rank over the matrix's field; 0 for the empty matrix.
std::size_t rank(const ExactMatrix& m);

/// True iff the vectors are linearly independent. The empty list is.
bool is_independent(const std::vector<ExactVector>& vectors);

/// Exact inverse by Gauss-Jordan elimination; SingularSystem if the matrix
/// is not square or not invertible.
ExactMatrix inverse(const ExactMatrix& m);

/// Exact determinant by elimination; SingularSystem if not square.
Scalar determinant(const ExactMatrix& m);

/// Incremental row-echelon span. push() reduces a vector against the rows
/// held so far and keeps it when it is independent of them; pop() undoes
/// the last successful push, which makes depth-first subset enumeration
/// cheap.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Returns true (and keeps the reduced vector) iff v is outside the span.
  bool push(const ExactVector& v);
  void pop();
  bool contains(const ExactVector& v) const;

 private:
  ExactVector reduce(const ExactVector& v) const;

  std::size_t dim_;
  std::vector<ExactVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dimred
