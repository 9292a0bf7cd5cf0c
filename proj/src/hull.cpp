// Facet enumeration for conv(A), d <= 3, exact rational predicates.
//
// d = 1: the two endpoints.
// d = 2: Andrew's monotone chain, collinear points dropped.
// d = 3: beneath-beyond incremental hull over triangles; coplanar triangles
//        are merged when the planes are reduced to primitive form.

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "patchkit/toric.hpp"

namespace patchkit {
namespace {

/// Scales a nonzero rational normal to a primitive integer vector pointing the
/// same way, then builds h(x) = <v, x> - <v, p> for a point p on the plane.
AffineForm primitive_form(const RationalPoint& normal, const RationalPoint& on_plane) {
  Integer den = 1;
  for (const auto& c : normal) den = lcm(den, denominator(c));
  std::vector<Integer> ints;
  ints.reserve(normal.size());
  Integer g = 0;
  for (const auto& c : normal) {
    Integer v = numerator(c) * (den / denominator(c));
    ints.push_back(v);
    g = gcd(g, abs(v));
  }
  RationalPoint v;
  v.reserve(ints.size());
  for (const auto& c : ints) v.emplace_back(c / g);
  Rational constant = 0;
  for (std::size_t k = 0; k < v.size(); ++k) constant -= v[k] * on_plane[k];
  return AffineForm(std::move(v), std::move(constant));
}

Rational cross2(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

FacetSystem hull_1d(const PointConfig& config) {
  auto [lo, hi] = std::minmax_element(
      config.points().begin(), config.points().end(),
      [](const RationalPoint& a, const RationalPoint& b) { return a[0] < b[0]; });
  FacetSystem out;
  out.forms.emplace_back(RationalPoint{Rational(1)}, Rational(-(*lo)[0]));
  out.forms.emplace_back(RationalPoint{Rational(-1)}, (*hi)[0]);
  return out;
}

FacetSystem hull_2d(const PointConfig& config) {
  std::vector<RationalPoint> pts = config.points();
  std::sort(pts.begin(), pts.end());
  std::vector<RationalPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // counter-clockwise, last point repeated the first

  FacetSystem out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RationalPoint& p = hull[i];
    const RationalPoint& q = hull[(i + 1) % hull.size()];
    // interior lies to the left of p -> q
    RationalPoint normal{-(q[1] - p[1]), q[0] - p[0]};
    out.forms.push_back(primitive_form(normal, p));
  }
  return out;
}

RationalPoint sub3(const RationalPoint& a, const RationalPoint& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

RationalPoint cross3(const RationalPoint& a, const RationalPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot3(const RationalPoint& a, const RationalPoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rational orient3(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                 const RationalPoint& d) {
  return dot3(cross3(sub3(b, a), sub3(c, a)), sub3(d, a));
}

FacetSystem hull_3d(const PointConfig& config) {
  const auto& pts = config.points();
  const std::size_t n = pts.size();

  // Initial tetrahedron. The configuration is full dimensional, so the
  // searches below always succeed.
  std::size_t i0 = 0;
  std::size_t i1 = 1;
  std::size_t i2 = n;
  for (std::size_t i = 2; i < n && i2 == n; ++i) {
    RationalPoint c = cross3(sub3(pts[i1], pts[i0]), sub3(pts[i], pts[i0]));
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) i2 = i;
  }
  std::size_t i3 = n;
  for (std::size_t i = 2; i < n && i3 == n; ++i) {
    if (i != i2 && orient3(pts[i0], pts[i1], pts[i2], pts[i]) != 0) i3 = i;
  }
  if (i2 == n || i3 == n) throw Error(ErrorKind::DegenerateHull, "points are coplanar");

  RationalPoint centroid(3, Rational(0));
  for (std::size_t idx : {i0, i1, i2, i3}) {
    for (std::size_t k = 0; k < 3; ++k) centroid[k] += pts[idx][k] / 4;
  }

  using Face = std::array<std::size_t, 3>;
  // Faces are oriented so that the centroid lies strictly on the negative side.
  auto oriented = [&](std::size_t a, std::size_t b, std::size_t c) -> Face {
    if (orient3(pts[a], pts[b], pts[c], centroid) > 0) return {a, c, b};
    return {a, b, c};
  };
  std::vector<Face> faces{oriented(i0, i1, i2), oriented(i0, i1, i3), oriented(i0, i2, i3),
                          oriented(i1, i2, i3)};

  for (std::size_t p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<bool> visible(faces.size());
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      visible[f] = orient3(pts[faces[f][0]], pts[faces[f][1]], pts[faces[f][2]], pts[p]) > 0;
      any = any || visible[f];
    }
    if (!any) continue;

    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) visible_edges.emplace(faces[f][e], faces[f][(e + 1) % 3]);
    }
    std::vector<Face> next;
    next.reserve(faces.size() + 8);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    for (const auto& [u, v] : visible_edges) {
      if (!visible_edges.contains({v, u})) next.push_back(oriented(u, v, p));
    }
    faces = std::move(next);
  }

  FacetSystem out;
  std::set<std::pair<RationalPoint, Rational>> seen;
  for (const auto& f : faces) {
    RationalPoint normal = cross3(sub3(pts[f[1]], pts[f[0]]), sub3(pts[f[2]], pts[f[0]]));
    // outward by construction; flip inward
    for (auto& c : normal) c = -c;
    AffineForm form = primitive_form(normal, pts[f[0]]);
    if (seen.emplace(form.normal(), form.constant()).second) out.forms.push_back(std::move(form));
  }
  return out;
}

}  // namespace

FacetSystem facet_system(const PointConfig& config) {
  switch (config.dim()) {
    case 1: return hull_1d(config);
    case 2: return hull_2d(config);
    case 3: return hull_3d(config);
    default:
      throw Error(ErrorKind::UnsupportedDimension,
                  "facet enumeration supports d <= 3, got d = " + std::to_string(config.dim()));
  }
}

void check_facet_system(const PointConfig& config, const FacetSystem& facets) {
  const std::size_t d = config.dim();
  if (facets.forms.empty()) throw Error(ErrorKind::InvalidInput, "facet system is empty");
  std::set<RationalPoint> normals;
  for (const auto& form : facets.forms) {
    if (form.dim() != d) throw Error(ErrorKind::DimensionMismatch, "facet form dimension != d");
    Integer g = 0;
    for (const auto& c : form.normal()) {
      if (!is_integer(c)) throw Error(ErrorKind::InvalidInput, "facet normal is not integral");
      g = gcd(g, abs(numerator(c)));
    }
    if (g != 1) throw Error(ErrorKind::InvalidInput, "facet normal is not primitive");
    for (const auto& a : config.points()) {
      if (form.evaluate(a) < 0) {
        throw Error(ErrorKind::InvalidInput, "a point of A violates a facet inequality");
      }
    }
    normals.insert(form.normal());
  }

  // {h_i >= 0} is bounded iff the normals positively span R^d, i.e. the
  // origin is interior to their convex hull.
  std::vector<RationalPoint> normal_list(normals.begin(), normals.end());
  if (exact_rank(normal_list) != d) {
    throw Error(ErrorKind::InvalidInput, "facet region is unbounded");
  }
  if (d > 3) return;
  bool bounded = false;
  try {
    PointConfig normal_config(normal_list);
    FacetSystem around = facet_system(normal_config);
    bounded = std::all_of(around.forms.begin(), around.forms.end(),
                          [](const AffineForm& f) { return f.constant() > 0; });
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateHull) throw;
  }
  if (!bounded) throw Error(ErrorKind::InvalidInput, "facet region is unbounded");
}

}  // namespace patchkit
