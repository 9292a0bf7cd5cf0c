#include "patchkit/fixtures.hpp"

#include "patchkit/toric.hpp"

namespace patchkit::fixtures {
namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

AffineForm form(Rational a, Rational b, Rational c) {
  return AffineForm(RationalPoint{std::move(a), std::move(b)}, std::move(c));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

PatchSpec bernstein(unsigned n) {
  std::vector<RationalPoint> points;
  std::vector<Rational> weights;
  for (unsigned i = 0; i <= n; ++i) {
    points.push_back({q(i)});
    weights.emplace_back(binomial(n, i));
  }
  return toric_patch(PointConfig(std::move(points)), WeightVector(std::move(weights)));
}

PatchSpec square() {
  PointConfig config({{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}});
  return toric_patch(config, WeightVector({q(1), q(1), q(1), q(1)}));
}

PatchSpec hexagon() {
  PointConfig config({{q(-1), q(-1)}, {q(-1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(0)},
                      {q(0), q(-1)}});
  const AffineForm one_minus_y = form(0, -1, 1);
  const AffineForm one_minus_x = form(-1, 0, 1);
  const AffineForm one_plus_x_minus_y = form(1, -1, 1);
  const AffineForm one_plus_y_minus_x = form(-1, 1, 1);
  const AffineForm one_plus_x = form(1, 0, 1);
  const AffineForm one_plus_y = form(0, 1, 1);
  FacetSystem facets{{one_minus_y, one_minus_x, one_plus_x_minus_y, one_plus_y_minus_x, one_plus_x,
                      one_plus_y}};

  auto product = [](std::initializer_list<AffineForm> forms) {
    std::vector<Factor> factors;
    for (const auto& f : forms) factors.push_back(Factor{f, 1});
    return FormProduct(q(1), std::move(factors));
  };
  std::vector<FormProduct> basis{
      product({one_plus_x_minus_y, one_minus_y, one_minus_x, one_plus_y_minus_x}),
      product({one_minus_y, one_minus_x, one_plus_y_minus_x, one_plus_y}),
      product({one_minus_x, one_plus_y_minus_x, one_plus_y, one_plus_x}),
      product({one_plus_y_minus_x, one_plus_y, one_plus_x, one_plus_x_minus_y}),
      product({one_plus_y, one_plus_x, one_plus_x_minus_y, one_minus_y}),
      product({one_plus_x, one_plus_x_minus_y, one_minus_y, one_minus_x}),
  };
  std::vector<Point> controls;
  for (const auto& p : config.points()) controls.push_back(to_double(p));
  return PatchSpec(config, WeightVector(std::vector<Rational>(6, q(1))), std::move(basis),
                   std::move(facets), std::nullopt, std::move(controls));
}

PointConfig pentagon_config() {
  return PointConfig({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(0)}, {q(0), q(1)}, {q(1), q(1)},
                      {q(2), q(1)}, {q(0), q(2)}, {q(1), q(2)}});
}

WeightVector pentagon_weights() {
  return WeightVector({q(3), q(5), q(2), q(5), q(7), q(2), q(2), q(2)});
}

PointConfig pentagon_tuned_points() {
  return PointConfig({{q(0), q(0)}, {q(6, 5), q(0)}, {q(2), q(0)}, {q(0), q(6, 5)},
                      {q(8, 7), q(8, 7)}, {q(2), q(1)}, {q(0), q(2)}, {q(1), q(2)}});
}

PatchSpec pentagon_toric() { return toric_patch(pentagon_config(), pentagon_weights()); }

PatchSpec pentagon_tuned() {
  const PointConfig config = pentagon_config();
  const WeightVector weights = pentagon_weights();
  FacetSystem facets = facet_system(config);
  const AffineForm s = form(1, 0, 0);
  const AffineForm t = form(0, 1, 0);
  const AffineForm s_partner = form(-1, q(-1, 2), 3);  // 3 - s - t/2
  const AffineForm t_partner = form(q(-1, 2), -1, 3);  // 3 - s/2 - t

  std::vector<FormProduct> basis;
  for (const auto& fp : toric_bezier(config, weights, facets)) {
    std::vector<Factor> factors;
    for (const auto& f : fp.factors()) {
      factors.push_back(f);
      if (f.form == s) factors.push_back(Factor{s_partner, f.exponent});
      if (f.form == t) factors.push_back(Factor{t_partner, f.exponent});
    }
    basis.emplace_back(fp.coefficient(), std::move(factors));
  }
  return PatchSpec(config, weights, std::move(basis), std::move(facets), pentagon_tuned_points());
}

}  // namespace patchkit::fixtures
