#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "patchkit/patch_core.hpp"
#include "patchkit/toric.hpp"

namespace patchkit {

struct IpfSettings {
  /// l-infinity threshold on the moment mismatch |pi_A(p) - y|.
  double tol = 1e-12;
  std::size_t max_iter = 100000;
  /// Required distance (in facet-form units) of the target from the boundary.
  double interior_margin = 1e-9;
  /// Record the log-likelihood after every iterate (diagnostics only).
  bool record_loglik = false;

  void validate() const;
};

struct IpfResult {
  SimplexPoint p;
  std::size_t iterations = 0;
  double residual = 0.0;
  /// Log-likelihood <theta, y> - log Z of each iterate, starting with p^(0).
  /// Empty unless IpfSettings::record_loglik is set.
  std::vector<double> loglik;
};

/// pi_A(p) in lifted coordinates: sum_a p_a a+ / sum_a p_a.
Point lifted_moment(const HomogenizedConfig& lifted, std::span<const double> p);

/// Iterative proportional fitting (generalized iterative scaling).
///
/// Starts from p = normalize(w) and repeats
///   p_a <- p_a * prod_i (y_i / m_i)^{a+_i},  m = pi_A(p),
/// renormalizing after each sweep, until |m - y|_inf <= tol. The limit is the
/// unique point of the toric model X_{A,w} whose moment equals y.
///
/// Throws NotInHull when y is not interior to conv(A+) by at least
/// interior_margin, NotConvergedError after max_iter sweeps, and
/// NumericalUnderflow when a coordinate of p collapses to zero.
IpfResult ipf_solve(const HomogenizedConfig& lifted, const WeightVector& weights,
                    const SimplexPoint& y, const IpfSettings& settings = {});

/// Evaluates the unique linear-precision blending functions of the toric
/// patch of shape (A, w) by inverting the tautological projection.
class LinearPrecisionSolver {
 public:
  LinearPrecisionSolver(PointConfig config, WeightVector weights, IpfSettings settings = {});

  const PointConfig& config() const noexcept { return config_; }
  const HomogenizedConfig& homogenized() const noexcept { return homogenized_; }

  IpfResult solve(std::span<const double> x) const;
  SimplexPoint blend(std::span<const double> x) const { return solve(x).p; }

 private:
  PointConfig config_;
  WeightVector weights_;
  IpfSettings settings_;
  std::optional<FacetSystem> facets_;
  HomogenizedConfig homogenized_;
};

SimplexPoint lp_blending(const PointConfig& config, const WeightVector& weights,
                         std::span<const double> x, const IpfSettings& settings = {});

/// sum_a p_a * a, the tautological projection of p back in A's coordinates.
Point tautological_projection(const PointConfig& config, std::span<const double> p);

}  // namespace patchkit
