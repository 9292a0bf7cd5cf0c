#include "patchkit/precision.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace patchkit {
namespace {

using nlohmann::json;

std::vector<long> exponent_of(const RationalPoint& a) {
  std::vector<long> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    if (!is_integer(c)) {
      throw Error(ErrorKind::NonLatticePoints, "composed projection needs integer exponents");
    }
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

template <class T>
std::vector<T> composed(const PointConfig& config, const WeightVector& weights,
                        const PointConfig& targets, std::span<const T> x) {
  if (weights.size() != config.size() || targets.size() != config.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights and targets must be indexed by A");
  }
  if (x.size() != config.dim()) throw Error(ErrorKind::DimensionMismatch, "composed projection argument");
  std::vector<T> out(targets.dim() + 1, T(0));
  for (std::size_t a = 0; a < config.size(); ++a) {
    const T value = from_rational<T>(weights[a]) * monomial<T>(exponent_of(config.point(a)), x);
    out[0] += value;
    for (std::size_t k = 0; k < targets.dim(); ++k) {
      out[k + 1] += value * from_rational<T>(targets.point(a)[k]);
    }
  }
  return out;
}

template <class T>
T abs_value(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T>
T binomial_residual(std::span<const T> p, const PointConfig& config, const WeightVector& weights) {
  if (p.size() != config.size() || weights.size() != config.size()) {
    throw Error(ErrorKind::DimensionMismatch, "p and weights must be indexed by A");
  }
  T worst(0);
  for (const auto& r : binomial_relations(config)) {
    const T wab = from_rational<T>(weights[r.a] * weights[r.b]);
    const T wcd = from_rational<T>(weights[r.c] * weights[r.d]);
    const T diff = p[r.a] * p[r.b] * wcd - p[r.c] * p[r.d] * wab;
    const T scaled = abs_value<T>(diff) / std::max(wab, wcd);
    worst = std::max(worst, scaled);
  }
  return worst;
}

template <class T>
T residual(const ImplicitSystem& system, std::span<const T> p) {
  if (p.size() != system.num_variables()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                                  " coordinates, system has " +
                                                  std::to_string(system.num_variables()) +
                                                  " variables");
  }
  T worst(0);
  for (const auto& poly : system.polynomials()) worst = std::max(worst, abs_value<T>(poly.evaluate(p)));
  return worst;
}

Verdict classify(double max_err, double pass_tol, double fail_tol) {
  if (max_err < pass_tol) return Verdict::Pass;
  if (max_err > fail_tol) return Verdict::Fail;
  return Verdict::Inconclusive;
}

std::pair<Point, Point> bounding_box(const PointConfig& config) {
  Point lo = config.point_double(0);
  Point hi = lo;
  for (std::size_t a = 1; a < config.size(); ++a) {
    const Point& p = config.point_double(a);
    for (std::size_t k = 0; k < p.size(); ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  return {lo, hi};
}

Rational rational_field(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(ErrorKind::InvalidInput, "expected a rational string or integer");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_json(const PrecisionReport& report) {
  json j;
  j["samples"] = report.samples_used;
  j["max_err"] = report.max_err;
  j["verdict"] = to_string(report.verdict);
  j["worst_point"] = report.worst_point;
  return j.dump();
}

std::vector<Point> sample_domain(const PatchSpec& spec, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw Error(ErrorKind::InvalidInput, "need at least one sample");
  auto [lo, hi] = bounding_box(spec.config());
  std::mt19937_64 rng(seed);
  std::vector<std::uniform_real_distribution<double>> axes;
  for (std::size_t k = 0; k < lo.size(); ++k) axes.emplace_back(lo[k], hi[k]);

  std::vector<Point> samples;
  samples.reserve(n_samples);
  std::size_t attempts = 0;
  Point x(lo.size());
  while (samples.size() < n_samples) {
    ++attempts;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = axes[k](rng);
    if (spec.facets().min_value(x) >= 0.0) samples.push_back(x);
    if (attempts >= 1000 && samples.size() * 1000 < attempts) {
      throw Error(ErrorKind::SamplingFailure, "rejection sampling acceptance below 0.1%");
    }
  }
  return samples;
}

std::vector<Point> clipped_grid(const PatchSpec& spec, std::size_t grid_n) {
  if (grid_n < 2) throw Error(ErrorKind::InvalidInput, "grid needs at least 2 points per axis");
  auto [lo, hi] = bounding_box(spec.config());
  const std::size_t d = lo.size();
  std::vector<std::size_t> idx(d, 0);
  std::vector<Point> out;
  Point x(d);
  while (true) {
    for (std::size_t k = 0; k < d; ++k) {
      x[k] = lo[k] + (hi[k] - lo[k]) * static_cast<double>(idx[k]) / static_cast<double>(grid_n - 1);
    }
    if (spec.facets().contains(x)) out.push_back(x);
    std::size_t k = 0;
    while (k < d && ++idx[k] == grid_n) idx[k++] = 0;
    if (k == d) break;
  }
  return out;
}

PrecisionReport check_linear_precision_at(const PatchSpec& spec, std::span<const Point> samples,
                                          double pass_tol, double fail_tol) {
  if (!(pass_tol < fail_tol)) throw Error(ErrorKind::InvalidInput, "pass_tol must be < fail_tol");
  if (samples.empty()) throw Error(ErrorKind::InvalidInput, "need at least one sample");
  PrecisionReport report;
  report.worst_point = samples.front();
  for (const auto& x : samples) {
    Point tau = tautological(spec, x);
    double err = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) err = std::max(err, std::abs(tau[k] - x[k]));
    if (err > report.max_err) {
      report.max_err = err;
      report.worst_point = x;
    }
  }
  report.samples_used = samples.size();
  report.verdict = classify(report.max_err, pass_tol, fail_tol);
  return report;
}

PrecisionReport check_linear_precision(const PatchSpec& spec, std::size_t n_samples,
                                       double pass_tol, double fail_tol, std::uint64_t seed) {
  if (!(pass_tol < fail_tol)) throw Error(ErrorKind::InvalidInput, "pass_tol must be < fail_tol");
  std::vector<Point> samples = sample_domain(spec, n_samples, seed);
  return check_linear_precision_at(spec, samples, pass_tol, fail_tol);
}

RationalLp1d rational_lp_1d(const WeightVector& weights) {
  if (weights.size() < 2) {
    throw Error(ErrorKind::WrongDimension, "need A = {0..n} with n >= 1");
  }
  const std::size_t n = weights.size() - 1;
  const Rational& lead = weights[n];
  const Rational alpha = weights[n - 1] / (Rational(n) * lead);
  // w_i == w_n C(n,i) alpha^(n-i), from i = n down to 0
  Rational binom = 1;
  Rational alpha_pow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t i = n - k;
    if (weights[i] != lead * binom * alpha_pow) return {false, std::nullopt};
    binom = binom * Rational(i) / Rational(k + 1);  // C(n, i-1) = C(n, i) * i / (n - i + 1)
    alpha_pow *= alpha;
  }
  return {true, alpha};
}

RationalLp1d rational_lp_1d(const PointConfig& config, const WeightVector& weights) {
  if (config.dim() != 1) throw Error(ErrorKind::WrongDimension, "rational_lp_1d needs d = 1");
  if (weights.size() != config.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  }
  std::vector<std::size_t> order(config.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return config.point(i)[0] < config.point(j)[0];
  });
  const Rational& start = config.point(order.front())[0];
  std::vector<Rational> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (config.point(order[k])[0] != start + Rational(k) || !is_integer(start)) {
      throw Error(ErrorKind::WrongDimension, "rational_lp_1d needs A = {0..n}");
    }
    sorted.push_back(weights[order[k]]);
  }
  return rational_lp_1d(WeightVector(std::move(sorted)));
}

std::vector<double> composed_projection(const PointConfig& config, const WeightVector& weights,
                                        const PointConfig& targets, std::span<const double> x) {
  return composed<double>(config, weights, targets, x);
}

std::vector<Rational> composed_projection(const PointConfig& config, const WeightVector& weights,
                                          const PointConfig& targets,
                                          std::span<const Rational> x) {
  return composed<Rational>(config, weights, targets, x);
}

bool is_base_point(const PointConfig& config, const WeightVector& weights,
                   const PointConfig& targets, std::span<const double> x) {
  std::vector<double> v = composed_projection(config, weights, targets, x);
  double scale = 0.0;
  for (std::size_t a = 0; a < config.size(); ++a) {
    double t = 1.0;
    for (double c : targets.point_double(a)) t = std::max(t, std::abs(c));
    scale = std::max(scale, std::abs(weights.as_double(a) *
                                     monomial<double>(exponent_of(config.point(a)), x)) * t);
  }
  for (double c : v) {
    if (std::abs(c) > 1e-10 * scale) return false;
  }
  return true;
}

std::optional<Point> dehomogenize(std::span<const double> v) {
  if (v.empty() || v[0] == 0.0) return std::nullopt;
  Point out(v.begin() + 1, v.end());
  for (double& c : out) c /= v[0];
  return out;
}

std::optional<RationalPoint> dehomogenize(std::span<const Rational> v) {
  if (v.empty() || v[0] == 0) return std::nullopt;
  RationalPoint out(v.begin() + 1, v.end());
  for (auto& c : out) c /= v[0];
  return out;
}

double Polynomial::evaluate(std::span<const double> y) const {
  double total = 0.0;
  for (const auto& t : terms) {
    double v = to_double(t.coefficient);
    for (std::size_t i = 0; i < t.powers.size(); ++i) v *= int_pow(y[i], t.powers[i]);
    total += v;
  }
  return total;
}

Rational Polynomial::evaluate(std::span<const Rational> y) const {
  Rational total = 0;
  for (const auto& t : terms) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < t.powers.size(); ++i) v *= int_pow(y[i], t.powers[i]);
    total += v;
  }
  return total;
}

ImplicitSystem::ImplicitSystem(std::size_t num_variables, std::vector<Polynomial> polynomials)
    : num_variables_(num_variables), polynomials_(std::move(polynomials)) {
  for (const auto& p : polynomials_) {
    for (const auto& t : p.terms) {
      if (t.powers.size() != num_variables_) {
        throw Error(ErrorKind::DimensionMismatch, "polynomial '" + p.name + "' has a term over " +
                                                      std::to_string(t.powers.size()) +
                                                      " variables");
      }
    }
  }
}

ImplicitSystem ImplicitSystem::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("implicit system JSON: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) {
      throw Error(ErrorKind::InvalidInput, "unsupported implicit system version");
    }
    std::vector<std::string> labels;
    for (const auto& v : j.at("variables")) labels.push_back(v.dump());
    std::vector<Polynomial> polys;
    for (const auto& pj : j.at("polynomials")) {
      Polynomial p;
      p.name = pj.at("name").get<std::string>();
      for (const auto& tj : pj.at("terms")) {
        p.terms.push_back({rational_field(tj.at("coefficient")),
                           tj.at("powers").get<std::vector<unsigned>>()});
      }
      polys.push_back(std::move(p));
    }
    ImplicitSystem system(labels.size(), std::move(polys));
    system.labels_ = std::move(labels);
    return system;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("implicit system JSON: ") + e.what());
  }
}

ImplicitSystem ImplicitSystem::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

ImplicitSystem ImplicitSystem::subset(std::span<const std::string> names) const {
  std::vector<Polynomial> picked;
  for (const auto& name : names) {
    auto it = std::find_if(polynomials_.begin(), polynomials_.end(),
                           [&](const Polynomial& p) { return p.name == name; });
    if (it == polynomials_.end()) throw Error(ErrorKind::InvalidInput, "no polynomial named " + name);
    picked.push_back(*it);
  }
  ImplicitSystem out(num_variables_, std::move(picked));
  out.labels_ = labels_;
  return out;
}

double implicit_residual(const ImplicitSystem& system, std::span<const double> p) {
  return residual<double>(system, p);
}

Rational implicit_residual(const ImplicitSystem& system, std::span<const Rational> p) {
  return residual<Rational>(system, p);
}

std::vector<BinomialRelation> binomial_relations(const PointConfig& config) {
  std::map<RationalPoint, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i; j < config.size(); ++j) {
      RationalPoint s(config.dim());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = config.point(i)[k] + config.point(j)[k];
      by_sum[std::move(s)].emplace_back(i, j);
    }
  }
  std::vector<BinomialRelation> out;
  for (const auto& [sum, pairs] : by_sum) {
    for (std::size_t u = 0; u < pairs.size(); ++u) {
      for (std::size_t v = u + 1; v < pairs.size(); ++v) {
        out.push_back({pairs[u].first, pairs[u].second, pairs[v].first, pairs[v].second});
      }
    }
  }
  return out;
}

double binomial_relation_residual(std::span<const double> p, const PointConfig& config,
                                  const WeightVector& weights) {
  return binomial_residual<double>(p, config, weights);
}

Rational binomial_relation_residual(std::span<const Rational> p, const PointConfig& config,
                                    const WeightVector& weights) {
  return binomial_residual<Rational>(p, config, weights);
}

}  // namespace patchkit
