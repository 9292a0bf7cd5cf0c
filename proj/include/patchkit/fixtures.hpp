#pragma once

#include "patchkit/patch_core.hpp"

/// Reference patches used by the tests, the CLI data files and the Python
/// smoke tests.
namespace patchkit::fixtures {

/// Toric Bezier patch on A = {0..n} with binomial weights; on [0, n] it is
/// the degree-n Bezier curve after x = n y.
PatchSpec bernstein(unsigned n);

/// Unit square {0,1}^2 with unit weights (the bilinear patch).
PatchSpec square();

/// Hexagon with vertices (-1,-1), (-1,0), (0,1), (1,1), (1,0), (0,-1);
/// blending function of a vertex = product of the edge forms not through it.
/// Control points are the vertices themselves.
PatchSpec hexagon();

/// The eight lattice points of the pentagon s,t >= 0, s,t <= 2, s + t <= 3,
/// ordered (0,0), (1,0), (2,0), (0,1), (1,1), (2,1), (0,2), (1,2).
PointConfig pentagon_config();
/// Weights 3, 5, 2, 5, 7, 2, 2, 2 in pentagon_config order.
WeightVector pentagon_weights();
/// Tuned index points B: the five vertices plus (6/5,0), (0,6/5), (8/7,8/7).
PointConfig pentagon_tuned_points();

/// Plain toric Bezier patch of the weighted pentagon (no linear precision).
PatchSpec pentagon_toric();

/// Toric Bezier functions of the pentagon with the facet form s replaced by
/// s (3 - s - t/2) and t by t (3 - s/2 - t), paired with the tuned points B.
PatchSpec pentagon_tuned();

}  // namespace patchkit::fixtures
