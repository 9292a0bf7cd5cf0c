// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "patchkit/fixtures.hpp"
#include "patchkit/ipf.hpp"
#include "patchkit/precision.hpp"
#include "patchkit/toric.hpp"
#include "properties.hpp"

using namespace patchkit;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::vector<Point> vertices(const PointConfig& config) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < config.size(); ++i) out.push_back(config.point_double(i));
  return out;
}

Result bernstein_precision() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool all_pass = true;
  for (unsigned n = 1; n <= 5; ++n) {
    PrecisionReport r = check_linear_precision(fixtures::bernstein(n), 1000, 1e-12, 1e-4, 7);
    worst = std::max(worst, r.max_err);
    all_pass = all_pass && r.samples_used == 1000 && r.max_err < 1e-12;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {all_pass && seconds < 1.0,
          fmt("max_err %.3g", worst) + fmt(", %.3f s", seconds)};
}

Result hexagon_identities() {
  PatchSpec hex = fixtures::hexagon();
  std::mt19937_64 rng(11);
  std::vector<Point> pts = vertices(hex.config());
  double sum_err = 0.0, moment_err = 0.0;
  for (int i = 0; i < 500; ++i) {
    Point x = oracle::interior_point(pts, rng);
    std::vector<double> beta = basis_values(hex, x);
    const double phi = oracle::hexagon_phi(x[0], x[1]);
    double total = 0.0, mx = 0.0, my = 0.0;
    for (std::size_t a = 0; a < beta.size(); ++a) {
      total += beta[a];
      mx += beta[a] * pts[a][0];
      my += beta[a] * pts[a][1];
    }
    sum_err = std::max(sum_err, std::fabs(total - phi));
    moment_err = std::max({moment_err, std::fabs(mx - phi * x[0]), std::fabs(my - phi * x[1])});
  }
  return {sum_err < 1e-12 && moment_err < 1e-12,
          fmt("sum %.3g", sum_err) + fmt(", moment %.3g", moment_err)};
}

Result hexagon_implicit() {
  PatchSpec hex = fixtures::hexagon();
  ImplicitSystem all = ImplicitSystem::from_file(PATCHKIT_DATA_DIR "/hexagon_implicit.json");
  const std::vector<std::string> names{"quadric_relation", "quadric_symmetric", "cubic"};
  ImplicitSystem system = all.subset(names);
  std::mt19937_64 rng(13);
  std::vector<Point> pts = vertices(hex.config());
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point x = oracle::interior_point(pts, rng);
    worst = std::max(worst, implicit_residual(system, normalized_basis(hex, x).coords()));
  }
  return {worst < 1e-12, fmt("max residual %.3g", worst)};
}

Result tuned_pentagon() {
  PointConfig a = fixtures::pentagon_config();
  WeightVector w = fixtures::pentagon_weights();
  PointConfig b = fixtures::pentagon_tuned_points();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  double map_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    Point x{u(rng), u(rng)};
    auto image = dehomogenize(composed_projection(a, w, b, x));
    auto g = oracle::pentagon_g(x[0], x[1]);
    map_err = std::max({map_err, std::fabs((*image)[0] - g[0]), std::fabs((*image)[1] - g[1])});
  }
  RationalPoint one{Rational(1), Rational(1)};
  auto exact = dehomogenize(composed_projection(a, w, b, one));
  auto g11 = oracle::pentagon_g(Rational(1), Rational(1));
  bool exact_ok = exact && (*exact)[0] == g11[0] && (*exact)[1] == g11[1] &&
                  g11[0] == Rational(6, 7) && g11[1] == Rational(6, 7);

  std::vector<Point> grid;
  for (int j = 0; j <= 20; ++j) {
    for (int i = 0; i <= 20; ++i) {
      if (i + j <= 30) grid.push_back({i / 10.0, j / 10.0});
    }
  }
  PrecisionReport r = check_linear_precision_at(fixtures::pentagon_tuned(), grid, 1e-10, 1e-4);
  return {map_err < 1e-12 && exact_ok && r.max_err < 1e-10 && grid.size() == 386,
          fmt("map %.3g", map_err) + (exact_ok ? ", g(1,1) = 6/7 exact" : ", g(1,1) wrong") +
              fmt(", grid max_err %.3g", r.max_err)};
}

Result base_points() {
  PointConfig a = fixtures::pentagon_config();
  WeightVector w = fixtures::pentagon_weights();
  PointConfig b = fixtures::pentagon_tuned_points();
  auto is_zero = [](const std::vector<Rational>& v) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  };
  auto pt = [](long sn, long sd, long tn, long td) {
    return RationalPoint{Rational(sn, sd), Rational(tn, td)};
  };
  bool zeros = true;
  for (const auto& x : {pt(-1, 1, -1, 1), pt(-1, 1, -1, 2), pt(-1, 2, -1, 1)}) {
    zeros = zeros && is_zero(composed_projection(a, w, a, x));
  }
  for (const auto& x : {pt(-1, 1, -1, 1), pt(0, 1, -3, 2), pt(-3, 2, 0, 1)}) {
    zeros = zeros && is_zero(composed_projection(a, w, b, x));
  }
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 10);
  int nonzero = 0;
  for (int i = 0; i < 20; ++i) {
    RationalPoint x{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (!is_zero(composed_projection(a, w, a, x)) && !is_zero(composed_projection(a, w, b, x))) {
      ++nonzero;
    }
  }
  return {zeros && nonzero == 20,
          std::string(zeros ? "6 base points exact" : "base point missed") + ", " +
              std::to_string(nonzero) + "/20 nonzero"};
}

Result ipf_correctness() {
  struct Case {
    std::string name;
    PointConfig config;
    WeightVector weights;
  };
  std::vector<Case> cases;
  {
    PatchSpec seg = fixtures::bernstein(4);
    cases.push_back({"segment", seg.config(), seg.weights()});
    PatchSpec sq = fixtures::square();
    cases.push_back({"square", sq.config(), sq.weights()});
    cases.push_back({"pentagon", fixtures::pentagon_config(), fixtures::pentagon_weights()});
  }
  std::mt19937_64 rng(23);
  double round_trip = 0.0;
  std::size_t max_iters = 0;
  bool solved = true;
  for (const auto& c : cases) {
    LinearPrecisionSolver solver(c.config, c.weights);
    std::vector<Point> pts = vertices(c.config);
    for (int i = 0; i < 50; ++i) {
      Point x = oracle::interior_point(pts, rng);
      try {
        IpfResult r = solver.solve(x);
        Point back = tautological_projection(c.config, r.p.coords());
        for (std::size_t k = 0; k < x.size(); ++k) {
          round_trip = std::max(round_trip, std::fabs(back[k] - x[k]));
        }
        max_iters = std::max(max_iters, r.iterations);
      } catch (const Error&) {
        solved = false;
      }
    }
  }

  // Simploids: the linear-precision blending values are the Bernstein ones.
  double bernstein_err = 0.0;
  auto check_simploid = [&](std::vector<SimplexBlock> blocks,
                            const std::function<double(const RationalPoint&, const Point&)>& closed) {
    auto [config, weights] = simploid_config(blocks);
    LinearPrecisionSolver solver(config, weights);
    std::vector<Point> pts = vertices(config);
    for (int i = 0; i < 20; ++i) {
      Point x = oracle::interior_point(pts, rng);
      SimplexPoint p = solver.blend(x);
      for (std::size_t a = 0; a < config.size(); ++a) {
        bernstein_err = std::max(bernstein_err, std::fabs(p[a] - closed(config.point(a), x)));
      }
    }
  };
  auto deg = [](const Rational& r) { return static_cast<unsigned>(to_double(r)); };
  check_simploid({{1, 3}}, [&](const RationalPoint& a, const Point& x) {
    return oracle::bernstein(3, deg(a[0]), x[0] / 3.0);
  });
  check_simploid({{2, 2}}, [&](const RationalPoint& a, const Point& x) {
    const unsigned i = deg(a[0]), j = deg(a[1]);
    const double u = x[0] / 2.0, v = x[1] / 2.0;
    return oracle::multinomial(2, {i, j}) * std::pow(u, i) * std::pow(v, j) *
           std::pow(1.0 - u - v, 2 - i - j);
  });
  check_simploid({{1, 2}, {1, 1}}, [&](const RationalPoint& a, const Point& x) {
    return oracle::bernstein(2, deg(a[0]), x[0] / 2.0) * oracle::bernstein(1, deg(a[1]), x[1]);
  });

  return {solved && round_trip < 1e-10 && bernstein_err < 1e-8,
          fmt("round trip %.3g", round_trip) + ", max iterations " + std::to_string(max_iters) +
              fmt(", simploid %.3g", bernstein_err)};
}

Result lp1d_classifier() {
  bool ok = true;
  int agreements = 0, cases = 0;
  auto agree = [&](const std::vector<Rational>& weights, bool expect) {
    RationalLp1d r = rational_lp_1d(WeightVector(weights));
    if (r.has_rational_lp != expect) ok = false;
    if (expect && (!r.alpha || *r.alpha != 1)) ok = false;
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < weights.size(); ++i) pts.push_back({Rational(static_cast<long>(i))});
    PatchSpec spec = toric_patch(PointConfig(pts), WeightVector(weights));
    PrecisionReport report = check_linear_precision(spec, 400);
    const bool check_pass = report.verdict == patchkit::Verdict::Pass;
    const bool check_fail = report.verdict == patchkit::Verdict::Fail;
    ++cases;
    if ((r.has_rational_lp && check_pass) || (!r.has_rational_lp && check_fail)) ++agreements;
  };
  for (unsigned n = 1; n <= 8; ++n) {
    std::vector<Rational> w;
    for (unsigned i = 0; i <= n; ++i) w.push_back(oracle::binomial_exact(n, i));
    agree(w, true);
  }
  // For n = 1 every weight pair is the pure power w_1 (x + w_0/w_1), so the
  // random non-binomial vectors start at n = 2.
  int linear_pure_powers = 0;
  for (long w0 = 1; w0 <= 4; ++w0) {
    RationalLp1d r = rational_lp_1d(WeightVector({Rational(w0), Rational(3)}));
    if (r.has_rational_lp && r.alpha && *r.alpha == Rational(w0, 3)) ++linear_pure_powers;
  }
  ok = ok && linear_pure_powers == 4;
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<unsigned> degree(2, 6);
  int generated = 0;
  while (generated < 100) {
    unsigned n = degree(rng);
    std::vector<Rational> w = oracle::random_weights(n + 1, rng);
    bool binomial = true;
    for (unsigned i = 0; i <= n; ++i) {
      binomial = binomial && w[i] * oracle::binomial_exact(n, 0) == w[0] * oracle::binomial_exact(n, i);
    }
    if (binomial) continue;
    agree(w, false);
    ++generated;
  }
  return {ok && agreements == cases,
          std::to_string(cases) + " weight vectors, " + std::to_string(agreements) +
              " agree with the sampled check, n=1 pairs give alpha = w0/w1"};
}

Result property_suite() {
  const std::uint64_t seed = 31;
  struct Named {
    const char* name;
    props::Outcome outcome;
  };
  std::vector<Named> runs{
      {"partition", props::partition_of_unity(seed, 60)},
      {"hull", props::convex_hull(seed, 30)},
      {"affine", props::affine_invariance(seed, 30)},
      {"normalize", props::normalize_idempotence(seed, 2000)},
      {"binomial", props::weighted_binomial_relations(seed, 30)},
      {"homogenize", props::homogenize_round_trip(seed, 40)},
  };
  bool ok = true;
  std::string detail;
  for (const auto& r : runs) {
    ok = ok && r.outcome.ok();
    if (!detail.empty()) detail += ", ";
    detail += std::string(r.name) + " " + std::to_string(r.outcome.checks - r.outcome.failures) +
              "/" + std::to_string(r.outcome.checks);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"Bernstein linear precision", bernstein_precision},
      {"Hexagon Wachspress identities", hexagon_identities},
      {"Hexagon implicit equations", hexagon_implicit},
      {"Tuned pentagon map and precision", tuned_pentagon},
      {"Pentagon base points", base_points},
      {"IPF correctness", ipf_correctness},
      {"d=1 rational linear precision classifier", lp1d_classifier},
      {"Property suite", property_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
