#include "patchkit/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

namespace patchkit {
namespace {

double triangle_area(const std::array<double, 3>& a, const std::array<double, 3>& b,
                     const std::array<double, 3>& c) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double n[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                       u[0] * v[1] - u[1] * v[0]};
  return 0.5 * std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
}

}  // namespace

Mesh tessellate(const PatchSpec& spec, std::size_t grid_n) {
  if (grid_n < 2) throw Error(ErrorKind::InvalidInput, "grid needs at least 2 points per axis");
  if (spec.dim() != 2) {
    throw Error(ErrorKind::WrongDimension, "tessellation needs a surface patch (d = 2)");
  }
  if (!spec.control_points()) {
    throw Error(ErrorKind::MissingControlPoints, "patch has no control points");
  }
  if (spec.control_points()->front().size() > 3) {
    throw Error(ErrorKind::InvalidInput, "control points must have at most 3 coordinates");
  }

  Point lo = spec.config().point_double(0);
  Point hi = lo;
  for (std::size_t a = 1; a < spec.size(); ++a) {
    const Point& p = spec.config().point_double(a);
    for (std::size_t k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }

  Mesh mesh;
  // vertex index of grid point (i, j), i along the first axis
  std::vector<std::optional<std::size_t>> index(grid_n * grid_n);
  const double steps = static_cast<double>(grid_n - 1);
  for (std::size_t j = 0; j < grid_n; ++j) {
    for (std::size_t i = 0; i < grid_n; ++i) {
      const Point x{lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / steps,
                    lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / steps};
      if (!spec.facets().contains(x)) continue;
      const Point image = eval_patch(spec, x);
      std::array<double, 3> v{0.0, 0.0, 0.0};
      for (std::size_t k = 0; k < image.size(); ++k) v[k] = image[k];
      index[j * grid_n + i] = mesh.vertices.size();
      mesh.vertices.push_back(v);
    }
  }
  if (mesh.vertices.empty()) {
    throw Error(ErrorKind::OutsideDomain, "no grid point lies inside the domain");
  }

  auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (triangle_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) > 1e-14) {
      mesh.faces.push_back({a, b, c});
    }
  };
  for (std::size_t j = 0; j + 1 < grid_n; ++j) {
    for (std::size_t i = 0; i + 1 < grid_n; ++i) {
      // corners counter-clockwise in parameter space
      const std::optional<std::size_t> corners[4] = {
          index[j * grid_n + i], index[j * grid_n + i + 1], index[(j + 1) * grid_n + i + 1],
          index[(j + 1) * grid_n + i]};
      std::vector<std::size_t> present;
      for (const auto& c : corners) {
        if (c) present.push_back(*c);
      }
      if (present.size() == 4) {
        emit(present[0], present[1], present[2]);
        emit(present[0], present[2], present[3]);
      } else if (present.size() == 3) {
        emit(present[0], present[1], present[2]);
      }
    }
  }
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  char line[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(line, sizeof line, "v %.15g %.15g %.15g\n", v[0], v[1], v[2]);
    out << line;
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

}  // namespace patchkit
