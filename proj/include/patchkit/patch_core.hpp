#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patchkit/errors.hpp"
#include "patchkit/rational.hpp"

namespace patchkit {

/// Tolerance on facet forms used to decide domain membership in float mode.
inline constexpr double kDomainTolerance = 1e-12;
/// A float value vector counts as "all zero" when every entry is below this.
inline constexpr double kAllZeroThreshold = 1e-300;

/// Finite indexed set A of distinct points in R^d with exact rational
/// coordinates. The affine span of the points is always all of R^d.
class PointConfig {
 public:
  explicit PointConfig(std::vector<RationalPoint> points, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }

  const std::vector<RationalPoint>& points() const noexcept { return points_; }
  const RationalPoint& point(std::size_t i) const { return points_.at(i); }
  const Point& point_double(std::size_t i) const { return points_d_.at(i); }

  /// Empty, or one label per point.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::span<const Rational> p) const;

  /// True when every coordinate is an integer.
  bool is_lattice() const;

  friend bool operator==(const PointConfig& a, const PointConfig& b) {
    return a.points_ == b.points_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RationalPoint> points_;
  std::vector<Point> points_d_;
  std::vector<std::string> labels_;
};

/// Positive rational weights indexed by a PointConfig.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  double as_double(std::size_t i) const { return values_d_.at(i); }
  const std::vector<double>& doubles() const noexcept { return values_d_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<double> values_d_;
};

/// h(x) = <normal, x> + constant.
class AffineForm {
 public:
  AffineForm(RationalPoint normal, Rational constant);

  std::size_t dim() const noexcept { return normal_.size(); }
  const RationalPoint& normal() const noexcept { return normal_; }
  const Rational& constant() const noexcept { return constant_; }

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.normal_ == b.normal_ && a.constant_ == b.constant_;
  }

 private:
  RationalPoint normal_;
  Rational constant_;
  Point normal_d_;
  double constant_d_;
};

/// The domain polytope as an intersection of half-spaces h_i >= 0.
struct FacetSystem {
  std::vector<AffineForm> forms;

  std::size_t dim() const { return forms.empty() ? 0 : forms.front().dim(); }

  /// Smallest facet value at x; nonnegative iff x lies in the polytope.
  double min_value(std::span<const double> x) const;
  Rational min_value(std::span<const Rational> x) const;

  bool contains(std::span<const double> x, double tolerance = kDomainTolerance) const {
    return min_value(x) >= -tolerance;
  }
  bool contains(std::span<const Rational> x) const { return min_value(x) >= 0; }

  friend bool operator==(const FacetSystem&, const FacetSystem&) = default;
};

struct Factor {
  AffineForm form;
  unsigned exponent = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// coefficient * prod_j form_j(x)^exponent_j. Covers toric Bezier functions,
/// Bernstein polynomials, Wachspress products and hand-tuned variants.
class FormProduct {
 public:
  FormProduct(Rational coefficient, std::vector<Factor> factors);

  const Rational& coefficient() const noexcept { return coefficient_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  friend bool operator==(const FormProduct& a, const FormProduct& b) {
    return a.coefficient_ == b.coefficient_ && a.factors_ == b.factors_;
  }

 private:
  Rational coefficient_;
  std::vector<Factor> factors_;
  double coefficient_d_;
};

/// A nonnegative vector whose entries sum to one (within 1e-12).
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<double>& coords() const& noexcept { return coords_; }
  std::vector<double> coords() && noexcept { return std::move(coords_); }
  double operator[](std::size_t i) const { return coords_.at(i); }

 private:
  std::vector<double> coords_;
};

/// Blending functions over A together with the data needed to use them:
/// facets of the domain, optional tuned index points B, optional controls.
class PatchSpec {
 public:
  PatchSpec(PointConfig config, WeightVector weights, std::vector<FormProduct> basis,
            FacetSystem facets, std::optional<PointConfig> taut_points = std::nullopt,
            std::optional<std::vector<Point>> control_points = std::nullopt);

  const PointConfig& config() const noexcept { return config_; }
  const WeightVector& weights() const noexcept { return weights_; }
  const std::vector<FormProduct>& basis() const noexcept { return basis_; }
  const FacetSystem& facets() const noexcept { return facets_; }
  const std::optional<PointConfig>& taut_points() const noexcept { return taut_points_; }
  const std::optional<std::vector<Point>>& control_points() const noexcept {
    return control_points_;
  }

  /// B when tuned, otherwise the points of A.
  const PointConfig& tautological_points() const noexcept {
    return taut_points_ ? *taut_points_ : config_;
  }

  std::size_t dim() const noexcept { return config_.dim(); }
  std::size_t size() const noexcept { return config_.size(); }

  PatchSpec with_control_points(std::vector<Point> controls) const;
  PatchSpec with_taut_points(std::optional<PointConfig> taut) const;

  friend bool operator==(const PatchSpec&, const PatchSpec&) = default;

 private:
  PointConfig config_;
  WeightVector weights_;
  std::vector<FormProduct> basis_;
  FacetSystem facets_;
  std::optional<PointConfig> taut_points_;
  std::optional<std::vector<Point>> control_points_;
};

double eval_form_product(const FormProduct& fp, std::span<const double> x);
Rational eval_form_product(const FormProduct& fp, std::span<const Rational> x);

/// Scales a nonnegative vector onto the simplex. The float result is a fixed
/// point: normalizing it again returns it bit for bit.
SimplexPoint normalize(std::span<const double> values);
std::vector<Rational> normalize(std::span<const Rational> values);

/// Raw blending values beta_a(x), no domain check.
std::vector<double> basis_values(const PatchSpec& spec, std::span<const double> x);
std::vector<Rational> basis_values(const PatchSpec& spec, std::span<const Rational> x);

/// Normalized blending values at x, after a domain check.
SimplexPoint normalized_basis(const PatchSpec& spec, std::span<const double> x);
std::vector<Rational> normalized_basis(const PatchSpec& spec, std::span<const Rational> x);

Point eval_patch(const PatchSpec& spec, std::span<const double> x);

Point tautological(const PatchSpec& spec, std::span<const double> x);
RationalPoint tautological(const PatchSpec& spec, std::span<const Rational> x);

/// Numerical rank (singular values above 1e-10 of the largest) of the
/// samples-by-basis evaluation matrix.
std::size_t nondegeneracy_rank(const PatchSpec& spec, std::span<const Point> samples);

/// Exact rank of a list of rational vectors.
std::size_t exact_rank(std::span<const RationalPoint> rows);

}  // namespace patchkit
