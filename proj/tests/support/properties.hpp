#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patchkit/patch_core.hpp"

namespace props {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  std::string first_failure;

  bool ok() const { return checks > 0 && failures == 0; }
  void record(bool passed, double value, const std::string& what);
};

struct NamedSpec {
  std::string name;
  patchkit::PatchSpec spec;
  bool toric;
};

/// Fixtures plus seeded random toric patches in dimensions 1 to 3.
std::vector<NamedSpec> reference_specs(std::uint64_t seed);

Outcome partition_of_unity(std::uint64_t seed, std::size_t samples_per_spec);
Outcome convex_hull(std::uint64_t seed, std::size_t samples_per_spec);
Outcome affine_invariance(std::uint64_t seed, std::size_t samples_per_spec);
Outcome normalize_idempotence(std::uint64_t seed, std::size_t vectors);
Outcome weighted_binomial_relations(std::uint64_t seed, std::size_t samples_per_spec);
Outcome homogenize_round_trip(std::uint64_t seed, std::size_t configs);

}  // namespace props
