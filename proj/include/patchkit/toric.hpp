#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "patchkit/patch_core.hpp"

namespace patchkit {

/// Facets of conv(A) for d <= 3, computed with exact rational predicates.
/// Each form has a primitive integer inward normal; when A is a lattice set
/// the constant is an integer too. Throws UnsupportedDimension for d > 3.
FacetSystem facet_system(const PointConfig& config);

/// Validates a facet system against its configuration: primitive integer
/// normals, every point of A on the nonnegative side, bounded region.
/// Throws InvalidInput on violation.
void check_facet_system(const PointConfig& config, const FacetSystem& facets);

/// Krasauskas's toric Bezier functions w_a * prod_i h_i(x)^{h_i(a)}.
/// Throws NonIntegerExponent unless every h_i(a) is a nonnegative integer.
std::vector<FormProduct> toric_bezier(const PointConfig& config, const WeightVector& weights,
                                      const FacetSystem& facets);

/// Facets plus toric Bezier basis, packaged as a patch.
PatchSpec toric_patch(const PointConfig& config, const WeightVector& weights,
                      std::optional<std::vector<Point>> control_points = std::nullopt);

/// x -> normalize(w_a x^a). Requires every x_i > 0 (NonPositiveArgument).
SimplexPoint monomial_param(const PointConfig& config, const WeightVector& weights,
                            std::span<const double> x);

/// Index [Z^d : Z(A - a_0)] of the lattice spanned by the differences.
Integer lattice_index(const PointConfig& config);

/// True iff the differences a - a_0 generate Z^d. Throws NonLatticePoints
/// when some coordinate is not an integer.
bool is_primitive(const PointConfig& config);

class LaurentPolynomial {
 public:
  struct Term {
    std::vector<long> exponent;
    Rational coefficient;
  };

  explicit LaurentPolynomial(std::vector<Term> terms);

  std::size_t dim() const noexcept { return terms_.front().exponent.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

 private:
  std::vector<Term> terms_;
};

/// f_{A,w} = sum_a w_a x^a. Requires integer points (NonLatticePoints).
LaurentPolynomial laurent_f(const PointConfig& config, const WeightVector& weights);

/// psi(x) = (x_i df/dx_i (x) / f(x))_i. Throws PoleAtArgument when f(x)
/// vanishes (|f| < 1e-300 in float mode) or x hits a negative exponent at 0.
Point toric_differential(const LaurentPolynomial& f, std::span<const double> x);
RationalPoint toric_differential(const LaurentPolynomial& f, std::span<const Rational> x);

struct SimplexBlock {
  std::size_t dim = 1;
  unsigned degree = 1;
};

/// Integer points of n_1 D_{d_1} x ... x n_m D_{d_m} with products of
/// multinomial weights. Within a block points are ordered by total degree,
/// then lexicographically descending; the first block varies fastest.
std::pair<PointConfig, WeightVector> simploid_config(std::span<const SimplexBlock> blocks);

/// A moved into the nonnegative orthant, scaled into the standard simplex and
/// lifted by a -> (1 - |a|, a).
class HomogenizedConfig {
 public:
  HomogenizedConfig(RationalPoint offset, Rational scale, std::vector<RationalPoint> lifted,
                    std::optional<FacetSystem> facets);

  std::size_t dim() const noexcept { return offset_.size(); }
  std::size_t size() const noexcept { return lifted_.size(); }

  /// Per-coordinate minima of A; forward(x) = (x - offset) * scale.
  const RationalPoint& offset() const noexcept { return offset_; }
  /// 1 / M with M = max(1, max_a |a - offset|_1).
  const Rational& scale() const noexcept { return scale_; }

  const std::vector<RationalPoint>& lifted_points() const noexcept { return lifted_; }
  const std::vector<Point>& lifted_points_double() const noexcept { return lifted_d_; }

  /// Facets of the scaled (unlifted) points, available when d <= 3.
  const std::optional<FacetSystem>& facets() const noexcept { return facets_; }

  RationalPoint forward(std::span<const Rational> x) const;
  Point forward(std::span<const double> x) const;
  RationalPoint back(std::span<const Rational> u) const;
  Point back(std::span<const double> u) const;

  /// u -> (1 - |u|, u).
  static RationalPoint lift(std::span<const Rational> u);
  static Point lift(std::span<const double> u);

 private:
  RationalPoint offset_;
  Rational scale_;
  double scale_d_;
  Point offset_d_;
  std::vector<RationalPoint> lifted_;
  std::vector<Point> lifted_d_;
  std::optional<FacetSystem> facets_;
};

HomogenizedConfig homogenize(const PointConfig& config);

}  // namespace patchkit
