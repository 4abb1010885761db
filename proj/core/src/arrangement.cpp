#include "dimred/arrangement.hpp"

#include <algorithm>
#include <cmath>

namespace dimred {

namespace {

std::string var(int i) { return "x" + std::to_string(i + 1); }

ExactVector unit_combo(int dim, int i, long ci, int j, long cj) {
  ExactVector v(static_cast<std::size_t>(dim), Scalar(0L));
  if (i >= 0 && i < dim) v[static_cast<std::size_t>(i)] += Scalar(ci);
  if (j >= 0 && j < dim) v[static_cast<std::size_t>(j)] += Scalar(cj);
  return v;
}

int next_id(const std::vector<Hyperplane>& hs) { return static_cast<int>(hs.size()); }

}  // namespace

Arrangement::Arrangement(std::string name, FieldPtr field, int dim, std::vector<Hyperplane> hyperplanes)
    : name_(std::move(name)), field_(std::move(field)), dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ < 1) throw ConstructionError(name_ + ": ambient dimension must be >= 1");
  if (hyperplanes_.empty()) throw ConstructionError(name_ + ": arrangement has no hyperplanes");
  if (static_cast<int>(hyperplanes_.size()) > kMaxGroundSet)
    throw ConstructionError(name_ + ": more than " + std::to_string(kMaxGroundSet) + " hyperplanes");
  for (std::size_t e = 0; e < hyperplanes_.size(); ++e) {
    auto& h = hyperplanes_[e];
    h.id = static_cast<int>(e);
    if (static_cast<int>(h.normal.size()) != dim_)
      throw ConstructionError(name_ + ": normal of hyperplane " + std::to_string(e) + " has wrong length");
    bool all_zero = true;
    for (const auto& s : h.normal) {
      if (s.field() != field_)
        throw FieldMismatch(name_ + ": normal entry in " + s.field()->name() + ", expected " + field_->name());
      if (!s.is_zero()) all_zero = false;
    }
    if (all_zero) throw ConstructionError(name_ + ": hyperplane " + std::to_string(e) + " has a zero normal");
    if (!(h.radius > 0.0) || !std::isfinite(h.radius))
      throw ConstructionError(name_ + ": radius of hyperplane " + std::to_string(e) + " must be positive");
    if (h.label.empty()) h.label = "h" + std::to_string(e);
  }
  std::vector<ExactVector> rows;
  rows.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) rows.push_back(h.normal);
  const std::size_t r = rank(ExactMatrix::from_rows(rows));
  if (static_cast<int>(r) != dim_)
    throw ConstructionError(name_ + " is not essential: normals have rank " + std::to_string(r) + " < " +
                            std::to_string(dim_));

  coeff_.reserve(hyperplanes_.size() * static_cast<std::size_t>(dim_));
  for (const auto& h : hyperplanes_)
    for (const auto& s : h.normal) coeff_.push_back(s.to_complex());
}

Arrangement Arrangement::braid(int m) {
  if (m < 2) throw ConstructionError("braid: need m >= 2 points");
  const int dim = m - 1;
  std::vector<Hyperplane> hs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      hs.push_back({next_id(hs), var(i) + "-" + var(j), unit_combo(dim, i, 1, j, -1), 1.0});
  return Arrangement("braid(" + std::to_string(m) + ")", Field::rational(), dim, std::move(hs));
}

Arrangement Arrangement::coxeter_d(int n) {
  if (n < 2) throw ConstructionError("coxeter_d: need n >= 2");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      hs.push_back({next_id(hs), var(i) + "-" + var(j), unit_combo(n, i, 1, j, -1), 1.0});
      hs.push_back({next_id(hs), var(i) + "+" + var(j), unit_combo(n, i, 1, j, 1), 1.0});
    }
  return Arrangement("coxeter_d(" + std::to_string(n) + ")", Field::rational(), n, std::move(hs));
}

Arrangement Arrangement::coxeter_b(int n) {
  if (n < 1) throw ConstructionError("coxeter_b: need n >= 1");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      hs.push_back({next_id(hs), var(i) + "-" + var(j), unit_combo(n, i, 1, j, -1), 1.0});
      hs.push_back({next_id(hs), var(i) + "+" + var(j), unit_combo(n, i, 1, j, 1), 1.0});
    }
  for (int l = 0; l < n; ++l) hs.push_back({next_id(hs), var(l), unit_combo(n, l, 1, -1, 0), 1.0});
  return Arrangement("coxeter_b(" + std::to_string(n) + ")", Field::rational(), n, std::move(hs));
}

Arrangement Arrangement::threshold(int n) {
  if (n < 2) throw ConstructionError("threshold: need n >= 2");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      hs.push_back({next_id(hs), var(i) + "+" + var(j), unit_combo(n, i, 1, j, 1), 1.0});
  return Arrangement("threshold(" + std::to_string(n) + ")", Field::rational(), n, std::move(hs));
}

Arrangement Arrangement::dowling(int n, int k) {
  if (n < 2) throw ConstructionError("dowling: need n >= 2");
  if (k < 1) throw ConstructionError("dowling: need k >= 1");
  const std::string name = "dowling(" + std::to_string(n) + "," + std::to_string(k) + ")";
  std::vector<Hyperplane> hs;
  if (k <= 2) {
    // zeta_1 = 1 and zeta_2 = -1 are rational; keep the arrangement complexified.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int m = 0; m < k; ++m) {
          const long c = (m == 0) ? -1 : 1;
          hs.push_back({next_id(hs), var(i) + (c < 0 ? "-" : "+") + var(j), unit_combo(n, i, 1, j, c), 1.0});
        }
    return Arrangement(name, Field::rational(), n, std::move(hs));
  }
  const FieldPtr field = Field::cyclotomic(static_cast<unsigned>(k));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int m = 0; m < k; ++m) {
        ExactVector v(static_cast<std::size_t>(n), Scalar::zero(field));
        v[static_cast<std::size_t>(i)] = Scalar::one(field);
        v[static_cast<std::size_t>(j)] = -Scalar::zeta_power(field, m);
        std::string label = var(i) + "-";
        if (m == 1) label += "z*";
        if (m > 1) label += "z^" + std::to_string(m) + "*";
        hs.push_back({next_id(hs), label + var(j), std::move(v), 1.0});
      }
  return Arrangement(name, field, n, std::move(hs));
}

Arrangement Arrangement::widom_rowlinson(const std::vector<int>& colours) {
  if (colours.size() < 2) throw ConstructionError("widom_rowlinson: need at least two colour classes");
  std::vector<int> colour_of;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    if (colours[c] < 1) throw ConstructionError("widom_rowlinson: every colour class needs >= 1 point");
    for (int i = 0; i < colours[c]; ++i) colour_of.push_back(static_cast<int>(c));
  }
  const int total = static_cast<int>(colour_of.size());
  const int dim = total - 1;
  std::vector<Hyperplane> hs;
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b) {
      if (colour_of[static_cast<std::size_t>(a)] == colour_of[static_cast<std::size_t>(b)]) continue;
      hs.push_back({next_id(hs), var(a) + "-" + var(b), unit_combo(dim, a, 1, b, -1), 1.0});
    }
  std::string name = "widom_rowlinson(";
  for (std::size_t c = 0; c < colours.size(); ++c) name += (c ? "," : "") + std::to_string(colours[c]);
  return Arrangement(name + ")", Field::rational(), dim, std::move(hs));
}

Arrangement Arrangement::custom(const std::vector<std::vector<Rational>>& normals) {
  if (normals.empty()) throw ConstructionError("custom: no normals given");
  const int dim = static_cast<int>(normals.front().size());
  std::vector<Hyperplane> hs;
  for (const auto& row : normals) {
    ExactVector v;
    for (const auto& q : row) v.emplace_back(q);
    hs.push_back({next_id(hs), "", std::move(v), 1.0});
  }
  return Arrangement("custom", Field::rational(), dim, std::move(hs));
}

std::vector<double> Arrangement::radii() const {
  std::vector<double> r;
  for (const auto& h : hyperplanes_) r.push_back(h.radius);
  return r;
}

bool Arrangement::unit_radii() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(), [](const Hyperplane& h) { return h.radius == 1.0; });
}

double Arrangement::max_radius() const {
  double m = 0.0;
  for (const auto& h : hyperplanes_) m = std::max(m, h.radius);
  return m;
}

Arrangement Arrangement::with_radii(std::span<const double> radii) const {
  if (static_cast<int>(radii.size()) != size())
    throw PreconditionError(name_ + ": expected " + std::to_string(size()) + " radii, got " +
                            std::to_string(radii.size()));
  std::vector<Hyperplane> hs = hyperplanes_;
  for (std::size_t e = 0; e < hs.size(); ++e) hs[e].radius = radii[e];
  return Arrangement(name_, field_, dim_, std::move(hs));
}

std::vector<ExactVector> Arrangement::normals(GroundSubset subset) const {
  std::vector<ExactVector> rows;
  for (int e : subset.elements()) rows.push_back(hyperplane(e).normal);
  return rows;
}

ExactMatrix Arrangement::normal_matrix(GroundSubset subset) const {
  auto rows = normals(subset);
  if (rows.empty()) return ExactMatrix(0, static_cast<std::size_t>(dim_), field_);
  return ExactMatrix::from_rows(rows);
}

void Arrangement::check_point_dim(int d) const {
  if (d < 0) throw PreconditionError(name_ + ": point dimension must be >= 0");
  if (!complexified() && d % 2 != 0)
    throw PreconditionError(name_ + " is not complexified: the real point dimension must be even (got " +
                            std::to_string(d) + ")");
}

void Arrangement::evaluate_into(int e, std::span<const double> x, int d, std::span<double> out) const {
  const std::complex<double>* a = &coeff_[static_cast<std::size_t>(e * dim_)];
  std::fill(out.begin(), out.begin() + d, 0.0);
  if (complexified()) {
    for (int i = 0; i < dim_; ++i) {
      const double ai = a[i].real();
      if (ai == 0.0) continue;
      const double* xi = x.data() + static_cast<std::size_t>(i * d);
      for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(c)] += ai * xi[c];
    }
    return;
  }
  for (int i = 0; i < dim_; ++i) {
    const std::complex<double> ai = a[i];
    if (ai == 0.0) continue;
    const double* xi = x.data() + static_cast<std::size_t>(i * d);
    for (int q = 0; q < d / 2; ++q) {
      const std::complex<double> z = ai * std::complex<double>(xi[2 * q], xi[2 * q + 1]);
      out[static_cast<std::size_t>(2 * q)] += z.real();
      out[static_cast<std::size_t>(2 * q + 1)] += z.imag();
    }
  }
}

double Arrangement::norm_sq(int e, std::span<const double> x, int d) const {
  double buf[64];
  std::vector<double> heap;
  std::span<double> out;
  if (d <= 64) {
    out = std::span<double>(buf, static_cast<std::size_t>(d));
  } else {
    heap.resize(static_cast<std::size_t>(d));
    out = heap;
  }
  evaluate_into(e, x, d, out);
  double s = 0.0;
  for (double v : out) s += v * v;
  return s;
}

std::vector<double> Arrangement::evaluate(int e, const Configuration& x) const {
  if (e < 0 || e >= size()) throw PreconditionError(name_ + ": hyperplane index out of range");
  check_point_dim(x.dim);
  if (x.points() != dim_ || static_cast<int>(x.coords.size()) != dim_ * x.dim)
    throw DimensionMismatch(name_ + ": configuration has " + std::to_string(x.points()) + " points, expected " +
                            std::to_string(dim_));
  std::vector<double> out(static_cast<std::size_t>(x.dim));
  evaluate_into(e, x.coords, x.dim, out);
  return out;
}

GroundSubset Arrangement::gamma_of(std::span<const double> x, int d) const {
  GroundSubset g;
  for (int e = 0; e < size(); ++e) {
    const double r = hyperplanes_[static_cast<std::size_t>(e)].radius;
    if (norm_sq(e, x, d) <= r * r) g = g.with(e);
  }
  return g;
}

GroundSubset Arrangement::gamma_of(const Configuration& x) const {
  check_point_dim(x.dim);
  if (x.points() != dim_ || static_cast<int>(x.coords.size()) != dim_ * x.dim)
    throw DimensionMismatch(name_ + ": configuration has wrong number of points");
  return gamma_of(x.coords, x.dim);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::braid: return "braid";
    case Family::coxeter_d: return "coxeter_d";
    case Family::coxeter_b: return "coxeter_b";
    case Family::threshold: return "threshold";
    case Family::dowling: return "dowling";
    case Family::widom_rowlinson: return "widom_rowlinson";
    case Family::custom: return "custom";
  }
  return "unknown";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::braid, Family::coxeter_d, Family::coxeter_b, Family::threshold, Family::dowling,
                   Family::widom_rowlinson, Family::custom})
    if (to_string(f) == text) return f;
  throw PreconditionError("unknown arrangement family '" + text + "'");
}

Arrangement ArrangementSpec::build() const {
  auto base = [&]() -> Arrangement {
    switch (family) {
      case Family::braid: return Arrangement::braid(n);
      case Family::coxeter_d: return Arrangement::coxeter_d(n);
      case Family::coxeter_b: return Arrangement::coxeter_b(n);
      case Family::threshold: return Arrangement::threshold(n);
      case Family::dowling:
        if (!k) throw PreconditionError("dowling family requires k");
        return Arrangement::dowling(n, *k);
      case Family::widom_rowlinson: return Arrangement::widom_rowlinson(colours);
      case Family::custom: {
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : normals) {
          std::vector<Rational> r;
          for (const auto& s : row) r.push_back(parse_rational(s));
          rows.push_back(std::move(r));
        }
        return Arrangement::custom(rows);
      }
    }
    throw PreconditionError("unknown family");
  }();
  if (radii.empty()) return base;
  return base.with_radii(radii);
}

}  // namespace dimred
