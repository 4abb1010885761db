#include "dimred/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace dimred {

namespace {

void trim(RationalPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.emplace_back(0);
}

bool is_zero_poly(const RationalPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Quotient and remainder of a / b, b non-zero.
std::pair<RationalPoly, RationalPoly> poly_divmod(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {RationalPoly{Rational(0)}, a};
  RationalPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Rational c = a[i] / lead;
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  trim(a);
  return {q, a};
}

// Reduces p modulo a monic modulus of degree deg; result has exactly deg
// coefficients.
RationalPoly reduce_mod(RationalPoly p, const RationalPoly& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    const Rational c = p[i];
    if (c == 0) continue;
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j <= deg; ++j) p[shift + j] -= c * modulus[j];
  }
  p.resize(deg, Rational(0));
  return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw PreconditionError("empty rational literal");
  if (t.front() == '+') t.erase(t.begin());
  Rational r;
  if (r.set_str(t, 10) != 0) throw PreconditionError("malformed rational literal '" + text + "'");
  if (r.get_den() == 0) throw PreconditionError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

unsigned euler_phi(unsigned k) {
  unsigned result = k;
  unsigned n = k;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

RationalPoly cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw PreconditionError("cyclotomic_polynomial: k must be >= 1");
  RationalPoly p(k + 1, Rational(0));
  p[0] = -1;
  p[k] = 1;
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

Field::Field(unsigned k, RationalPoly modulus) : k_(k), modulus_(std::move(modulus)) {
  if (k_ == 0) {
    zeta_ = {1.0, 0.0};
  } else {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(k_);
    zeta_ = {std::cos(angle), std::sin(angle)};
  }
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Q(zeta_" + std::to_string(k_) + ")";
}

FieldPtr Field::rational() {
  static const FieldPtr q = std::make_shared<const Field>(0u, RationalPoly{Rational(0), Rational(1)});
  return q;
}

FieldPtr Field::cyclotomic(unsigned k) {
  if (k == 0) throw PreconditionError("cyclotomic field needs k >= 1");
  static std::mutex mutex;
  static std::map<unsigned, FieldPtr> interned;
  std::lock_guard lock(mutex);
  auto it = interned.find(k);
  if (it != interned.end()) return it->second;
  auto field = std::make_shared<const Field>(k, cyclotomic_polynomial(k));
  interned.emplace(k, field);
  return field;
}

Scalar::Scalar() : field_(Field::rational()), coeffs_{Rational(0)} {}

Scalar::Scalar(long value) : field_(Field::rational()), coeffs_{Rational(value)} {}

Scalar::Scalar(Rational value) : field_(Field::rational()), coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
}

Scalar::Scalar(FieldPtr field, RationalPoly coefficients) : field_(std::move(field)) {
  if (coefficients.empty()) coefficients.emplace_back(0);
  coeffs_ = reduce_mod(std::move(coefficients), field_->modulus());
}

Scalar Scalar::zero(const FieldPtr& field) { return Scalar(field, RationalPoly{Rational(0)}); }

Scalar Scalar::one(const FieldPtr& field) { return Scalar(field, RationalPoly{Rational(1)}); }

Scalar Scalar::zeta_power(const FieldPtr& field, long power) {
  if (field->is_rational()) throw PreconditionError("zeta_power: the rational field has no zeta");
  const long k = static_cast<long>(field->k());
  const long p = ((power % k) + k) % k;
  RationalPoly mono(static_cast<std::size_t>(p) + 1, Rational(0));
  mono.back() = 1;
  return Scalar(field, std::move(mono));
}

bool Scalar::is_zero() const { return is_zero_poly(coeffs_); }

bool Scalar::is_rational_valued() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Scalar::as_rational() const {
  if (!is_rational_valued()) throw PreconditionError("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  std::complex<double> power{1.0, 0.0};
  for (const auto& c : coeffs_) {
    acc += c.get_d() * power;
    power *= field_->zeta();
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (field_->is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldMismatch("scalar arithmetic across fields " + field_->name() + " and " + other.field_->name());
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  coeffs_ = reduce_mod(poly_mul(coeffs_, other.coeffs_), field_->modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  if (coeffs_.size() == 1) {
    if (other.coeffs_[0] == 0) throw SingularSystem("division by zero");
    coeffs_[0] /= other.coeffs_[0];
    return *this;
  }
  return *this *= other.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularSystem("inverse of zero");
  if (coeffs_.size() == 1) return Scalar(field_, RationalPoly{Rational(1) / coeffs_[0]});
  // Extended Euclid in Q[x]: track s with s * a == r (mod modulus).
  RationalPoly r0 = field_->modulus();
  RationalPoly r1 = coeffs_;
  trim(r1);
  RationalPoly s0{Rational(0)};
  RationalPoly s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, rem] = poly_divmod(r0, r1);
    RationalPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (is_zero_poly(r1)) throw SingularSystem("element is not invertible modulo Phi_k");
  }
  // r1 is a non-zero constant c with s1 * a == c.
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return Scalar(field_, std::move(s1));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.coeffs_ == b.coeffs_;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldPtr& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return ExactMatrix();
  const std::size_t cols = rows.front().size();
  FieldPtr field = Field::rational();
  bool have_field = false;
  for (const auto& row : rows) {
    if (row.size() != cols) throw PreconditionError("ExactMatrix: ragged rows");
    for (const auto& s : row) {
      if (!have_field) {
        field = s.field();
        have_field = true;
      } else if (s.field() != field) {
        throw FieldMismatch("ExactMatrix: entries from " + field->name() + " and " + s.field()->name());
      }
    }
  }
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldPtr& field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("ExactMatrix product: inner dimensions differ");
  if (field_ != other.field_) throw FieldMismatch("ExactMatrix product across fields");
  ExactMatrix out(rows_, other.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  ExactMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

bool is_independent(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) return true;
  return rank(ExactMatrix::from_rows(vectors)) == vectors.size();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw SingularSystem("inverse: matrix is not square");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n, m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw SingularSystem("inverse: matrix is singular");
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    const Scalar p = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= p;
      inv(c, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw SingularSystem("determinant: matrix is not square");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(m.field());
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar p = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) * p;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

EchelonSpan::EchelonSpan(std::size_t dim) : dim_(dim) {}

ExactVector EchelonSpan::reduce(const ExactVector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("EchelonSpan: vector length differs from span dimension");
  ExactVector w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (w[p].is_zero()) continue;
    const Scalar factor = w[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[i][j].is_zero()) w[j] -= factor * rows_[i][j];
  }
  return w;
}

bool EchelonSpan::push(const ExactVector& v) {
  ExactVector w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = w[p].inverse();
  for (auto& s : w)
    if (!s.is_zero()) s *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

void EchelonSpan::pop() {
  if (rows_.empty()) throw PreconditionError("EchelonSpan::pop on empty span");
  rows_.pop_back();
  pivots_.pop_back();
}

bool EchelonSpan::contains(const ExactVector& v) const {
  const ExactVector w = reduce(v);
  for (const auto& s : w)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace dimred
