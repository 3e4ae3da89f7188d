#pragma once

#include <string>

#include "zoa/problems.hpp"

namespace zoa {

// Deterministic seeded generators. Random families ("nulc", "tfd", "mod",
// "spd", "mwc", "gfvs", "sfvs", "nmct", "zoa") produce small fuzzing
// instances of the given problem type; structured families ("chain", "grid",
// "theta") produce native constraint instances that scale linearly with
// `size` for benchmarking.
struct GenOptions {
  int size = 10;   // vertex count (random families) / edge-count scale (structured)
  int extra = -1;  // extra edges beyond a spanning tree; -1 picks size/2, 0 keeps a forest
  int k = 2;       // budget stored on the generated problem
};

const std::vector<std::string>& generator_families();

// Throws InputError on an unknown family.
ProblemInstance generate(const std::string& family, uint64_t seed, const GenOptions& opt = {});

}  // namespace zoa
