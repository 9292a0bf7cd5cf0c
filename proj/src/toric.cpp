#include "patchkit/toric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace patchkit {
namespace {

std::vector<long> integer_exponent(const RationalPoint& a) {
  std::vector<long> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    if (!is_integer(c)) throw Error(ErrorKind::NonLatticePoints, "point has a non-integer coordinate");
    out.push_back(numerator(c).convert_to<long>());
  }
  return out;
}

template <class T>
T monomial(std::span<const long> exponent, std::span<const T> x) {
  T v(1);
  for (std::size_t k = 0; k < exponent.size(); ++k) {
    if (exponent[k] == 0) continue;
    if (exponent[k] < 0 && x[k] == 0) {
      throw Error(ErrorKind::PoleAtArgument, "negative exponent at a zero coordinate");
    }
    v *= int_pow(x[k], exponent[k]);
  }
  return v;
}

bool is_zero(double v) { return std::abs(v) < kAllZeroThreshold; }
bool is_zero(const Rational& v) { return v == 0; }

template <class T>
std::vector<T> differential(const LaurentPolynomial& f, std::span<const T> x) {
  if (x.size() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "toric differential argument");
  T total(0);
  std::vector<T> moments(f.dim(), T(0));
  for (const auto& term : f.terms()) {
    T value = from_rational<T>(term.coefficient) * monomial<T>(term.exponent, x);
    total += value;
    for (std::size_t k = 0; k < moments.size(); ++k) {
      moments[k] += value * T(term.exponent[k]);
    }
  }
  if (is_zero(total)) throw Error(ErrorKind::PoleAtArgument, "f vanishes at the argument");
  for (auto& m : moments) m /= total;
  return moments;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Points of degree * standard simplex in R^dim, graded then lex-descending.
std::vector<std::vector<unsigned>> simplex_points(std::size_t dim, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(dim, 0);
  for (unsigned total = 0; total <= degree; ++total) {
    // compositions of `total` into dim nonnegative parts, lex descending
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
      if (k + 1 == dim) {
        current[k] = left;
        out.push_back(current);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        current[k] = v;
        rec(k + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

}  // namespace

std::vector<FormProduct> toric_bezier(const PointConfig& config, const WeightVector& weights,
                                      const FacetSystem& facets) {
  if (weights.size() != config.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  }
  std::vector<FormProduct> basis;
  basis.reserve(config.size());
  for (std::size_t a = 0; a < config.size(); ++a) {
    std::vector<Factor> factors;
    factors.reserve(facets.forms.size());
    for (const auto& h : facets.forms) {
      Rational e = h.evaluate(config.point(a));
      if (!is_integer(e) || e < 0) {
        throw Error(ErrorKind::NonIntegerExponent,
                    "facet value " + to_string(e) + " at a point of A is not a nonnegative integer");
      }
      factors.push_back(Factor{h, numerator(e).convert_to<unsigned>()});
    }
    basis.emplace_back(weights[a], std::move(factors));
  }
  return basis;
}

PatchSpec toric_patch(const PointConfig& config, const WeightVector& weights,
                      std::optional<std::vector<Point>> control_points) {
  FacetSystem facets = facet_system(config);
  std::vector<FormProduct> basis = toric_bezier(config, weights, facets);
  return PatchSpec(config, weights, std::move(basis), std::move(facets), std::nullopt,
                   std::move(control_points));
}

SimplexPoint monomial_param(const PointConfig& config, const WeightVector& weights,
                            std::span<const double> x) {
  if (x.size() != config.dim()) throw Error(ErrorKind::DimensionMismatch, "monomial_param argument");
  for (double xi : x) {
    if (!(xi > 0.0)) throw Error(ErrorKind::NonPositiveArgument, "monomial_param needs x > 0");
  }
  std::vector<double> logs(config.size());
  for (std::size_t a = 0; a < config.size(); ++a) {
    double l = std::log(weights.as_double(a));
    const Point& p = config.point_double(a);
    for (std::size_t k = 0; k < x.size(); ++k) l += p[k] * std::log(x[k]);
    logs[a] = l;
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> values(config.size());
  for (std::size_t a = 0; a < config.size(); ++a) values[a] = std::exp(logs[a] - top);
  return normalize(values);
}

Integer lattice_index(const PointConfig& config) {
  const std::size_t d = config.dim();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 1; i < config.size(); ++i) {
    std::vector<Integer> row(d);
    for (std::size_t k = 0; k < d; ++k) {
      Rational diff = config.point(i)[k] - config.point(0)[k];
      if (!is_integer(diff) || !is_integer(config.point(i)[k])) {
        throw Error(ErrorKind::NonLatticePoints, "point has a non-integer coordinate");
      }
      row[k] = numerator(diff);
    }
    rows.push_back(std::move(row));
  }
  for (const auto& c : config.point(0)) {
    if (!is_integer(c)) throw Error(ErrorKind::NonLatticePoints, "point has a non-integer coordinate");
  }

  // Integer row echelon form by Euclidean reduction within each column.
  Integer index = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d; ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[rank], rows[best]);
      bool reduced = true;
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q = rows[r][c] / rows[rank][c];
        for (std::size_t k = c; k < d; ++k) rows[r][k] -= q * rows[rank][k];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) {
        index *= abs(rows[rank][c]);
        ++rank;
        break;
      }
    }
  }
  if (rank != d) return 0;
  return index;
}

bool is_primitive(const PointConfig& config) { return lattice_index(config) == 1; }

LaurentPolynomial::LaurentPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "Laurent polynomial has no terms");
  std::vector<std::vector<long>> exps;
  for (const auto& t : terms_) {
    if (t.exponent.size() != terms_.front().exponent.size()) {
      throw Error(ErrorKind::DimensionMismatch, "exponents of unequal dimension");
    }
    if (t.coefficient <= 0) throw Error(ErrorKind::InvalidInput, "coefficients must be positive");
    exps.push_back(t.exponent);
  }
  std::sort(exps.begin(), exps.end());
  if (std::adjacent_find(exps.begin(), exps.end()) != exps.end()) {
    throw Error(ErrorKind::InvalidInput, "exponent vectors must be distinct");
  }
}

double LaurentPolynomial::evaluate(std::span<const double> x) const {
  double v = 0.0;
  for (const auto& t : terms_) v += to_double(t.coefficient) * monomial<double>(t.exponent, x);
  return v;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> x) const {
  Rational v = 0;
  for (const auto& t : terms_) v += t.coefficient * monomial<Rational>(t.exponent, x);
  return v;
}

LaurentPolynomial laurent_f(const PointConfig& config, const WeightVector& weights) {
  if (weights.size() != config.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  }
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(config.size());
  for (std::size_t a = 0; a < config.size(); ++a) {
    terms.push_back({integer_exponent(config.point(a)), weights[a]});
  }
  return LaurentPolynomial(std::move(terms));
}

Point toric_differential(const LaurentPolynomial& f, std::span<const double> x) {
  return differential<double>(f, x);
}

RationalPoint toric_differential(const LaurentPolynomial& f, std::span<const Rational> x) {
  return differential<Rational>(f, x);
}

std::pair<PointConfig, WeightVector> simploid_config(std::span<const SimplexBlock> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "simploid needs at least one block");
  struct BlockPoints {
    std::vector<std::vector<unsigned>> points;
    std::vector<Integer> weights;
  };
  std::vector<BlockPoints> per_block;
  for (const auto& b : blocks) {
    if (b.dim < 1 || b.degree < 1) {
      throw Error(ErrorKind::InvalidInput, "simploid blocks need dim >= 1 and degree >= 1");
    }
    BlockPoints bp;
    bp.points = simplex_points(b.dim, b.degree);
    const Integer n_fact = factorial(b.degree);
    for (const auto& p : bp.points) {
      unsigned total = 0;
      Integer den = 1;
      for (unsigned c : p) {
        total += c;
        den *= factorial(c);
      }
      den *= factorial(b.degree - total);
      bp.weights.push_back(n_fact / den);
    }
    per_block.push_back(std::move(bp));
  }

  std::vector<RationalPoint> points;
  std::vector<Rational> weights;
  std::vector<std::size_t> counter(blocks.size(), 0);
  while (true) {
    RationalPoint p;
    Integer w = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (unsigned c : per_block[b].points[counter[b]]) p.emplace_back(c);
      w *= per_block[b].weights[counter[b]];
    }
    points.push_back(std::move(p));
    weights.emplace_back(w);
    std::size_t b = 0;
    while (b < blocks.size() && ++counter[b] == per_block[b].points.size()) counter[b++] = 0;
    if (b == blocks.size()) break;
  }
  return {PointConfig(std::move(points)), WeightVector(std::move(weights))};
}

HomogenizedConfig::HomogenizedConfig(RationalPoint offset, Rational scale,
                                     std::vector<RationalPoint> lifted,
                                     std::optional<FacetSystem> facets)
    : offset_(std::move(offset)),
      scale_(std::move(scale)),
      scale_d_(to_double(scale_)),
      offset_d_(to_double(offset_)),
      lifted_(std::move(lifted)),
      facets_(std::move(facets)) {
  for (const auto& p : lifted_) {
    Rational sum = 0;
    for (const auto& c : p) {
      if (c < 0) throw Error(ErrorKind::InvalidInput, "lifted point has a negative entry");
      sum += c;
    }
    if (sum != 1) throw Error(ErrorKind::InvalidInput, "lifted point does not sum to 1");
    lifted_d_.push_back(to_double(p));
  }
}

RationalPoint HomogenizedConfig::forward(std::span<const Rational> x) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "forward map argument");
  RationalPoint u(dim());
  for (std::size_t k = 0; k < dim(); ++k) u[k] = (x[k] - offset_[k]) * scale_;
  return u;
}

Point HomogenizedConfig::forward(std::span<const double> x) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "forward map argument");
  Point u(dim());
  for (std::size_t k = 0; k < dim(); ++k) u[k] = (x[k] - offset_d_[k]) * scale_d_;
  return u;
}

RationalPoint HomogenizedConfig::back(std::span<const Rational> u) const {
  if (u.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "back map argument");
  RationalPoint x(dim());
  for (std::size_t k = 0; k < dim(); ++k) x[k] = u[k] / scale_ + offset_[k];
  return x;
}

Point HomogenizedConfig::back(std::span<const double> u) const {
  if (u.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "back map argument");
  Point x(dim());
  for (std::size_t k = 0; k < dim(); ++k) x[k] = u[k] / scale_d_ + offset_d_[k];
  return x;
}

RationalPoint HomogenizedConfig::lift(std::span<const Rational> u) {
  RationalPoint out(u.size() + 1);
  Rational total = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    out[k + 1] = u[k];
    total += u[k];
  }
  out[0] = 1 - total;
  return out;
}

Point HomogenizedConfig::lift(std::span<const double> u) {
  Point out(u.size() + 1);
  double total = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    out[k + 1] = u[k];
    total += u[k];
  }
  out[0] = 1.0 - total;
  return out;
}

HomogenizedConfig homogenize(const PointConfig& config) {
  const std::size_t d = config.dim();
  RationalPoint offset = config.point(0);
  for (const auto& p : config.points()) {
    for (std::size_t k = 0; k < d; ++k) offset[k] = std::min(offset[k], p[k]);
  }
  Rational bound = 1;
  for (const auto& p : config.points()) {
    Rational l1 = 0;
    for (std::size_t k = 0; k < d; ++k) l1 += p[k] - offset[k];
    bound = std::max(bound, l1);
  }
  const Rational scale = 1 / bound;

  std::vector<RationalPoint> scaled;
  std::vector<RationalPoint> lifted;
  for (const auto& p : config.points()) {
    RationalPoint u(d);
    for (std::size_t k = 0; k < d; ++k) u[k] = (p[k] - offset[k]) * scale;
    lifted.push_back(HomogenizedConfig::lift(u));
    scaled.push_back(std::move(u));
  }
  std::optional<FacetSystem> facets;
  if (d <= 3) facets = facet_system(PointConfig(std::move(scaled)));
  return HomogenizedConfig(std::move(offset), scale, std::move(lifted), std::move(facets));
}

}  // namespace patchkit
