#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patchkit/patch_core.hpp"

namespace patchkit {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

inline constexpr double kDefaultPassTol = 1e-8;
inline constexpr double kDefaultFailTol = 1e-4;

struct PrecisionReport {
  std::size_t samples_used = 0;
  /// max over samples of |tau(x) - x|_inf
  double max_err = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  Point worst_point;
};

/// {"samples", "max_err", "verdict", "worst_point"}
std::string to_json(const PrecisionReport& report);

/// Uniform samples of the domain polytope by seeded rejection from the
/// bounding box of A. Throws SamplingFailure when fewer than 0.1% of the
/// proposals land inside.
std::vector<Point> sample_domain(const PatchSpec& spec, std::size_t n_samples, std::uint64_t seed);

/// The grid_n^d bounding-box grid of A, keeping the points inside the domain
/// (facet test at tolerance 1e-12). Row-major with the first coordinate
/// varying fastest.
std::vector<Point> clipped_grid(const PatchSpec& spec, std::size_t grid_n);

/// Samples the tautological map and compares it with the identity.
PrecisionReport check_linear_precision(const PatchSpec& spec, std::size_t n_samples,
                                       double pass_tol = kDefaultPassTol,
                                       double fail_tol = kDefaultFailTol, std::uint64_t seed = 0);

/// Same check on caller-supplied parameter values.
PrecisionReport check_linear_precision_at(const PatchSpec& spec, std::span<const Point> samples,
                                          double pass_tol = kDefaultPassTol,
                                          double fail_tol = kDefaultFailTol);

struct RationalLp1d {
  bool has_rational_lp = false;
  std::optional<Rational> alpha;
};

/// d = 1, A = {0..n}: rational linear precision holds iff
/// f = w_n (x + alpha)^n, checked exactly coefficient by coefficient.
RationalLp1d rational_lp_1d(const WeightVector& weights);
/// As above, after checking that A is a run of consecutive integers in R^1
/// (WrongDimension otherwise); weights are reordered by point value.
RationalLp1d rational_lp_1d(const PointConfig& config, const WeightVector& weights);

/// sum_a w_a x^a (1, t_a), un-normalized. A must be a lattice set
/// (NonLatticePoints). A zero vector signals a base point.
std::vector<double> composed_projection(const PointConfig& config, const WeightVector& weights,
                                        const PointConfig& targets, std::span<const double> x);
std::vector<Rational> composed_projection(const PointConfig& config, const WeightVector& weights,
                                          const PointConfig& targets,
                                          std::span<const Rational> x);

/// Float base-point test: every coordinate of composed_projection is below
/// 1e-10 of the largest weighted monomial magnitude (scaled by |t_a|).
bool is_base_point(const PointConfig& config, const WeightVector& weights,
                   const PointConfig& targets, std::span<const double> x);

/// Divides coordinates 1..d by coordinate 0; nullopt when it is zero.
std::optional<Point> dehomogenize(std::span<const double> v);
std::optional<RationalPoint> dehomogenize(std::span<const Rational> v);

/// Polynomial with rational coefficients; each term stores a dense exponent
/// vector over the variables.
struct Polynomial {
  struct Term {
    Rational coefficient;
    std::vector<unsigned> powers;
  };
  std::string name;
  std::vector<Term> terms;

  double evaluate(std::span<const double> y) const;
  Rational evaluate(std::span<const Rational> y) const;
};

class ImplicitSystem {
 public:
  ImplicitSystem(std::size_t num_variables, std::vector<Polynomial> polynomials);

  /// Parses the versioned JSON fixture format
  /// {"version":1, "variables":[...], "polynomials":[{"name","terms":[
  ///   {"coefficient":"p/q","powers":[...]}]}]}.
  static ImplicitSystem from_json(const std::string& text);
  static ImplicitSystem from_file(const std::string& path);

  std::size_t num_variables() const noexcept { return num_variables_; }
  const std::vector<Polynomial>& polynomials() const noexcept { return polynomials_; }
  /// Labels of the variables when loaded from a file.
  const std::vector<std::string>& variable_labels() const noexcept { return labels_; }

  /// The polynomials whose names are listed, in the listed order.
  ImplicitSystem subset(std::span<const std::string> names) const;

 private:
  std::size_t num_variables_;
  std::vector<Polynomial> polynomials_;
  std::vector<std::string> labels_;
};

/// max_j |P_j(p)|; 0 for an empty system. DimensionMismatch when |p| differs
/// from the variable count.
double implicit_residual(const ImplicitSystem& system, std::span<const double> p);
Rational implicit_residual(const ImplicitSystem& system, std::span<const Rational> p);

struct BinomialRelation {
  std::size_t a, b, c, d;  // a + b == c + d as points of A
};

/// Every relation a + b = c + d between two distinct unordered pairs of A.
std::vector<BinomialRelation> binomial_relations(const PointConfig& config);

/// max over relations of |p_a p_b w_c w_d - p_c p_d w_a w_b| / max(w_a w_b, w_c w_d).
double binomial_relation_residual(std::span<const double> p, const PointConfig& config,
                                  const WeightVector& weights);
Rational binomial_relation_residual(std::span<const Rational> p, const PointConfig& config,
                                    const WeightVector& weights);

}  // namespace patchkit
