#pragma once

#include <string>

#include "patchkit/patch_core.hpp"

namespace patchkit {

/// Reads a PatchFile JSON document:
///
///   dimension       int
///   points          [[rational, ...], ...]   rationals as "p/q" strings or ints
///   labels          [string, ...]            optional
///   weights         [rational, ...]
///   taut_points     [[rational, ...], ...]   optional
///   control_points  [[float, ...], ...]      optional
///   basis           "toric-bezier" | [{"coefficient": rational,
///                     "factors": [{"normal": [...], "constant": rational,
///                                  "exponent": int}, ...]}, ...]
///   facets          [{"normal": [...], "constant": rational}, ...]  optional
///
/// Facets are computed from the points when absent. Unknown keys are
/// rejected. Throws Error(InvalidInput) on any schema violation.
PatchSpec read_patch_json(const std::string& text);
PatchSpec read_patch_file(const std::string& path);

/// Serializes every field; rationals are written as strings. With
/// toric_basis the basis is written as "toric-bezier" instead of explicitly.
std::string write_patch_json(const PatchSpec& spec, bool toric_basis = false);

}  // namespace patchkit
