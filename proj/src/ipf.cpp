#include "patchkit/ipf.hpp"

#include <algorithm>
#include <cmath>

namespace patchkit {
namespace {

double sum_in_order(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void check_target(const HomogenizedConfig& lifted, const SimplexPoint& y, double margin) {
  const std::size_t d = lifted.dim();
  if (y.size() != d + 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "target must have " + std::to_string(d + 1) + " lifted coordinates");
  }
  for (std::size_t i = 0; i <= d; ++i) {
    bool used = std::any_of(lifted.lifted_points_double().begin(),
                            lifted.lifted_points_double().end(),
                            [i](const Point& a) { return a[i] > 0.0; });
    if (used && !(y[i] > 0.0)) {
      throw Error(ErrorKind::NotInHull, "target coordinate " + std::to_string(i) + " is zero");
    }
  }
  if (lifted.facets()) {
    Point u(y.coords().begin() + 1, y.coords().end());
    double m = lifted.facets()->min_value(u);
    if (!(m >= margin)) {
      throw Error(ErrorKind::NotInHull, "target facet margin " + std::to_string(m) +
                                            " below interior margin " + std::to_string(margin));
    }
  }
}

}  // namespace

void IpfSettings::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "IPF tolerance must be positive");
  if (max_iter < 1) throw Error(ErrorKind::InvalidInput, "IPF max_iter must be >= 1");
  if (!(interior_margin > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "IPF interior margin must be positive");
  }
}

Point lifted_moment(const HomogenizedConfig& lifted, std::span<const double> p) {
  const auto& pts = lifted.lifted_points_double();
  if (p.size() != pts.size()) throw Error(ErrorKind::DimensionMismatch, "p indexed by A");
  Point m(lifted.dim() + 1, 0.0);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += p[a] * pts[a][i];
  }
  const double total = sum_in_order(p);
  for (double& v : m) v /= total;
  return m;
}

IpfResult ipf_solve(const HomogenizedConfig& lifted, const WeightVector& weights,
                    const SimplexPoint& y, const IpfSettings& settings) {
  settings.validate();
  if (weights.size() != lifted.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  }
  check_target(lifted, y, settings.interior_margin);

  const auto& pts = lifted.lifted_points_double();
  const std::size_t n = pts.size();
  const std::size_t dims = lifted.dim() + 1;

  std::vector<double> p = normalize(weights.doubles()).coords();
  std::vector<double> theta(dims, 0.0);
  double log_z = 0.0;
  std::vector<double> loglik;
  auto record = [&] {
    if (!settings.record_loglik) return;
    double l = -log_z;
    for (std::size_t i = 0; i < dims; ++i) l += theta[i] * y[i];
    loglik.push_back(l);
  };
  record();

  std::vector<double> log_ratio(dims);
  for (std::size_t iter = 0;; ++iter) {
    Point m = lifted_moment(lifted, p);
    const double residual = max_abs_diff(m, y.coords());
    if (residual <= settings.tol) {
      return IpfResult{SimplexPoint(std::move(p)), iter, residual, std::move(loglik)};
    }
    if (iter == settings.max_iter) throw NotConvergedError(iter, residual);

    for (std::size_t i = 0; i < dims; ++i) {
      log_ratio[i] = (y[i] > 0.0 && m[i] > 0.0) ? std::log(y[i] / m[i]) : 0.0;
      theta[i] += log_ratio[i];
    }
    for (std::size_t a = 0; a < n; ++a) {
      double e = 0.0;
      for (std::size_t i = 0; i < dims; ++i) e += pts[a][i] * log_ratio[i];
      p[a] *= std::exp(e);
    }
    const double total = sum_in_order(p);
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw Error(ErrorKind::NumericalUnderflow, "IPF iterate lost all mass");
    }
    for (double& v : p) {
      v /= total;
      if (!(v > 0.0)) throw Error(ErrorKind::NumericalUnderflow, "IPF iterate has a zero coordinate");
    }
    log_z += std::log(total);
    record();
  }
}

LinearPrecisionSolver::LinearPrecisionSolver(PointConfig config, WeightVector weights,
                                             IpfSettings settings)
    : config_(std::move(config)),
      weights_(std::move(weights)),
      settings_(settings),
      facets_(config_.dim() <= 3 ? std::optional<FacetSystem>(facet_system(config_))
                                 : std::nullopt),
      homogenized_(homogenize(config_)) {
  settings_.validate();
  if (weights_.size() != config_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weights length != |A|");
  }
}

IpfResult LinearPrecisionSolver::solve(std::span<const double> x) const {
  if (x.size() != config_.dim()) throw Error(ErrorKind::DimensionMismatch, "lp_blending argument");
  if (facets_) {
    const double m = facets_->min_value(x);
    if (!(m >= settings_.interior_margin)) {
      throw Error(ErrorKind::OutsideDomain, "argument is not strictly inside conv(A) (margin " +
                                                std::to_string(m) + ")");
    }
  }
  Point y = HomogenizedConfig::lift(homogenized_.forward(x));
  if (std::any_of(y.begin(), y.end(), [](double v) { return !(v >= 0.0); })) {
    throw Error(ErrorKind::OutsideDomain, "argument maps outside the probability simplex");
  }
  return ipf_solve(homogenized_, weights_, SimplexPoint(std::move(y)), settings_);
}

SimplexPoint lp_blending(const PointConfig& config, const WeightVector& weights,
                         std::span<const double> x, const IpfSettings& settings) {
  return LinearPrecisionSolver(config, weights, settings).blend(x);
}

Point tautological_projection(const PointConfig& config, std::span<const double> p) {
  if (p.size() != config.size()) throw Error(ErrorKind::DimensionMismatch, "p indexed by A");
  Point out(config.dim(), 0.0);
  for (std::size_t a = 0; a < config.size(); ++a) {
    const Point& pt = config.point_double(a);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += p[a] * pt[k];
  }
  return out;
}

}  // namespace patchkit
