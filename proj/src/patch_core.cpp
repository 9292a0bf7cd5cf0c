#include "patchkit/patch_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/SVD>

#include "patchkit/toric.hpp"

namespace patchkit {
namespace {

double sum_in_order(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

template <class T>
void check_dimension(const PatchSpec& spec, std::span<const T> x) {
  if (x.size() != spec.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "argument has dimension " + std::to_string(x.size()) +
                                                  ", patch has dimension " +
                                                  std::to_string(spec.dim()));
  }
}

void check_domain(const PatchSpec& spec, std::span<const double> x) {
  check_dimension(spec, x);
  double margin = spec.facets().min_value(x);
  if (!(margin >= -kDomainTolerance)) {
    throw Error(ErrorKind::OutsideDomain, "facet value " + std::to_string(margin) + " < 0");
  }
}

void check_domain(const PatchSpec& spec, std::span<const Rational> x) {
  check_dimension(spec, x);
  if (spec.facets().min_value(x) < 0) {
    throw Error(ErrorKind::OutsideDomain, "argument lies outside the domain polytope");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PointConfig

PointConfig::PointConfig(std::vector<RationalPoint> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.empty()) throw Error(ErrorKind::InvalidInput, "point configuration is empty");
  dim_ = points_.front().size();
  if (dim_ == 0) throw Error(ErrorKind::InvalidInput, "points must have dimension >= 1");
  for (const auto& p : points_) {
    if (p.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "points of unequal dimension");
  }
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw Error(ErrorKind::InvalidInput, "labels must be empty or one per point");
  }
  std::set<RationalPoint> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) throw Error(ErrorKind::InvalidInput, "points are not distinct");

  std::vector<RationalPoint> differences;
  differences.reserve(points_.size() - 1);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    RationalPoint diff(dim_);
    for (std::size_t k = 0; k < dim_; ++k) diff[k] = points_[i][k] - points_[0][k];
    differences.push_back(std::move(diff));
  }
  if (exact_rank(differences) != dim_) {
    throw Error(ErrorKind::DegenerateHull, "points do not affinely span R^" + std::to_string(dim_));
  }

  points_d_.reserve(points_.size());
  for (const auto& p : points_) points_d_.push_back(to_double(p));
}

std::optional<std::size_t> PointConfig::find(std::span<const Rational> p) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (std::equal(p.begin(), p.end(), points_[i].begin(), points_[i].end())) return i;
  }
  return std::nullopt;
}

bool PointConfig::is_lattice() const {
  return std::all_of(points_.begin(), points_.end(), [](const RationalPoint& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return is_integer(c); });
  });
}

// ---------------------------------------------------------------------------
// WeightVector, AffineForm, FacetSystem, FormProduct, SimplexPoint

WeightVector::WeightVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::InvalidInput, "weight vector is empty");
  for (const auto& w : values_) {
    if (w <= 0) throw Error(ErrorKind::InvalidInput, "weights must be positive, got " + to_string(w));
    values_d_.push_back(to_double(w));
  }
}

AffineForm::AffineForm(RationalPoint normal, Rational constant)
    : normal_(std::move(normal)),
      constant_(std::move(constant)),
      normal_d_(to_double(normal_)),
      constant_d_(to_double(constant_)) {}

double AffineForm::evaluate(std::span<const double> x) const {
  if (x.size() != normal_.size()) throw Error(ErrorKind::DimensionMismatch, "affine form argument");
  double v = constant_d_;
  for (std::size_t k = 0; k < x.size(); ++k) v += normal_d_[k] * x[k];
  return v;
}

Rational AffineForm::evaluate(std::span<const Rational> x) const {
  if (x.size() != normal_.size()) throw Error(ErrorKind::DimensionMismatch, "affine form argument");
  Rational v = constant_;
  for (std::size_t k = 0; k < x.size(); ++k) v += normal_[k] * x[k];
  return v;
}

double FacetSystem::min_value(std::span<const double> x) const {
  double m = HUGE_VAL;
  for (const auto& f : forms) m = std::min(m, f.evaluate(x));
  return m;
}

Rational FacetSystem::min_value(std::span<const Rational> x) const {
  if (forms.empty()) throw Error(ErrorKind::InvalidInput, "empty facet system");
  Rational m = forms.front().evaluate(x);
  for (std::size_t i = 1; i < forms.size(); ++i) m = std::min(m, forms[i].evaluate(x));
  return m;
}

FormProduct::FormProduct(Rational coefficient, std::vector<Factor> factors)
    : coefficient_(std::move(coefficient)),
      factors_(std::move(factors)),
      coefficient_d_(to_double(coefficient_)) {
  if (coefficient_ <= 0) {
    throw Error(ErrorKind::InvalidInput, "form product coefficient must be positive");
  }
  for (const auto& f : factors_) {
    if (f.form.dim() != factors_.front().form.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "form product factors of unequal dimension");
    }
  }
}

double FormProduct::evaluate(std::span<const double> x) const {
  double v = coefficient_d_;
  for (const auto& f : factors_) {
    if (f.exponent == 0) continue;
    v *= int_pow(f.form.evaluate(x), static_cast<long>(f.exponent));
  }
  return v;
}

Rational FormProduct::evaluate(std::span<const Rational> x) const {
  Rational v = coefficient_;
  for (const auto& f : factors_) {
    if (f.exponent == 0) continue;
    v *= int_pow(f.form.evaluate(x), static_cast<long>(f.exponent));
  }
  return v;
}

SimplexPoint::SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorKind::InvalidInput, "simplex point is empty");
  for (double c : coords_) {
    if (!(c >= 0.0)) throw Error(ErrorKind::InvalidInput, "simplex point has a negative entry");
  }
  if (std::abs(sum_in_order(coords_) - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidInput, "simplex point does not sum to 1");
  }
}

// ---------------------------------------------------------------------------
// PatchSpec

PatchSpec::PatchSpec(PointConfig config, WeightVector weights, std::vector<FormProduct> basis,
                     FacetSystem facets, std::optional<PointConfig> taut_points,
                     std::optional<std::vector<Point>> control_points)
    : config_(std::move(config)),
      weights_(std::move(weights)),
      basis_(std::move(basis)),
      facets_(std::move(facets)),
      taut_points_(std::move(taut_points)),
      control_points_(std::move(control_points)) {
  const std::size_t n = config_.size();
  const std::size_t d = config_.dim();
  if (weights_.size() != n) throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  if (basis_.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis length != |A|");
  for (const auto& fp : basis_) {
    for (const auto& f : fp.factors()) {
      if (f.form.dim() != d) throw Error(ErrorKind::DimensionMismatch, "basis form dimension != d");
    }
  }
  check_facet_system(config_, facets_);
  if (taut_points_ && (taut_points_->size() != n || taut_points_->dim() != d)) {
    throw Error(ErrorKind::DimensionMismatch, "taut_points must match the configuration shape");
  }
  if (control_points_) {
    if (control_points_->size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "control point count != |A|");
    }
    const std::size_t ell = control_points_->front().size();
    if (ell == 0) throw Error(ErrorKind::InvalidInput, "control points must be nonempty vectors");
    for (const auto& b : *control_points_) {
      if (b.size() != ell) throw Error(ErrorKind::DimensionMismatch, "control points of unequal length");
    }
  }
}

PatchSpec PatchSpec::with_control_points(std::vector<Point> controls) const {
  return PatchSpec(config_, weights_, basis_, facets_, taut_points_, std::move(controls));
}

PatchSpec PatchSpec::with_taut_points(std::optional<PointConfig> taut) const {
  return PatchSpec(config_, weights_, basis_, facets_, std::move(taut), control_points_);
}

// ---------------------------------------------------------------------------
// Operations

double eval_form_product(const FormProduct& fp, std::span<const double> x) {
  return fp.evaluate(x);
}

Rational eval_form_product(const FormProduct& fp, std::span<const Rational> x) {
  return fp.evaluate(x);
}

SimplexPoint normalize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "cannot normalize an empty vector");
  bool any_positive = false;
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidInput, "normalize requires finite nonnegative entries");
    }
    any_positive = any_positive || v >= kAllZeroThreshold;
  }
  if (!any_positive) throw Error(ErrorKind::AllZero, "all blending values vanish (base point)");

  std::vector<double> out(values.begin(), values.end());
  double sum = sum_in_order(out);
  if (!std::isfinite(sum)) {
    const double largest = *std::max_element(out.begin(), out.end());
    for (double& v : out) v /= largest;
    sum = sum_in_order(out);
  }
  // A quotient v / sum always lands within this band, so vectors inside it
  // are returned untouched and a second call is the identity.
  const double band = 4.0 * static_cast<double>(out.size()) * std::numeric_limits<double>::epsilon();
  if (std::abs(sum - 1.0) <= band) return SimplexPoint(std::move(out));
  for (double& v : out) v /= sum;
  return SimplexPoint(std::move(out));
}

std::vector<Rational> normalize(std::span<const Rational> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "cannot normalize an empty vector");
  Rational sum = 0;
  for (const auto& v : values) {
    if (v < 0) throw Error(ErrorKind::InvalidInput, "normalize requires nonnegative entries");
    sum += v;
  }
  if (sum == 0) throw Error(ErrorKind::AllZero, "all blending values vanish (base point)");
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v / sum);
  return out;
}

std::vector<double> basis_values(const PatchSpec& spec, std::span<const double> x) {
  check_dimension(spec, x);
  std::vector<double> out;
  out.reserve(spec.size());
  for (const auto& fp : spec.basis()) out.push_back(fp.evaluate(x));
  return out;
}

std::vector<Rational> basis_values(const PatchSpec& spec, std::span<const Rational> x) {
  check_dimension(spec, x);
  std::vector<Rational> out;
  out.reserve(spec.size());
  for (const auto& fp : spec.basis()) out.push_back(fp.evaluate(x));
  return out;
}

SimplexPoint normalized_basis(const PatchSpec& spec, std::span<const double> x) {
  check_domain(spec, x);
  std::vector<double> values = basis_values(spec, x);
  // Points up to kDomainTolerance outside a facet may give odd powers of tiny
  // negative numbers.
  for (double& v : values) v = std::max(v, 0.0);
  return normalize(values);
}

std::vector<Rational> normalized_basis(const PatchSpec& spec, std::span<const Rational> x) {
  check_domain(spec, x);
  return normalize(std::span<const Rational>(basis_values(spec, x)));
}

Point eval_patch(const PatchSpec& spec, std::span<const double> x) {
  if (!spec.control_points()) {
    throw Error(ErrorKind::MissingControlPoints, "patch has no control points");
  }
  const auto& controls = *spec.control_points();
  SimplexPoint beta = normalized_basis(spec, x);
  Point out(controls.front().size(), 0.0);
  for (std::size_t a = 0; a < controls.size(); ++a) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta[a] * controls[a][k];
  }
  return out;
}

Point tautological(const PatchSpec& spec, std::span<const double> x) {
  const PointConfig& targets = spec.tautological_points();
  SimplexPoint beta = normalized_basis(spec, x);
  Point out(spec.dim(), 0.0);
  for (std::size_t a = 0; a < targets.size(); ++a) {
    const Point& t = targets.point_double(a);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta[a] * t[k];
  }
  return out;
}

RationalPoint tautological(const PatchSpec& spec, std::span<const Rational> x) {
  const PointConfig& targets = spec.tautological_points();
  std::vector<Rational> beta = normalized_basis(spec, x);
  RationalPoint out(spec.dim(), Rational(0));
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta[a] * targets.point(a)[k];
  }
  return out;
}

std::size_t nondegeneracy_rank(const PatchSpec& spec, std::span<const Point> samples) {
  const std::size_t n = spec.size();
  if (samples.size() < n) {
    throw Error(ErrorKind::TooFewSamples, "need at least |A| = " + std::to_string(n) + " samples");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(samples.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::vector<double> row = basis_values(spec, samples[i]);
    for (std::size_t a = 0; a < n; ++a) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) = row[a];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = 1e-10 * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

std::size_t exact_rank(std::span<const RationalPoint> rows_in) {
  std::vector<RationalPoint> rows(rows_in.begin(), rows_in.end());
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace patchkit
