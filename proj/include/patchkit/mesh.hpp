#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "patchkit/patch_core.hpp"

namespace patchkit {

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
};

/// Evaluates a surface patch (d = 2) on the grid_n x grid_n bounding-box grid
/// clipped to the domain. Every admissible grid point becomes a vertex; cells
/// with four admissible corners give two triangles, cells with three give one.
/// Triangles whose image has area <= 1e-14 are dropped. Control points of
/// dimension below 3 are padded with zeros.
Mesh tessellate(const PatchSpec& spec, std::size_t grid_n);

/// "v x y z" lines, then "f i j k" lines with 1-based indices.
void write_obj(const Mesh& mesh, std::ostream& out);

}  // namespace patchkit
