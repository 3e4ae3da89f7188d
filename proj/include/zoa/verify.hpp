#pragma once

#include <optional>

#include "zoa/instance.hpp"

namespace zoa {

// Exact separation for the covering constraints: is there a conflicting walk
// whose accumulated vertex cost (counting multiplicity) is below 1?
// Implemented as a shortest-path search over states (vertex, implied value),
// which is exact because the cost of a walk is the sum of per-visit costs and
// the implied value is the only other walk property that matters.
// Requires tracked ground truth. Costs are in halves.
struct SeparationResult {
  bool feasible = true;
  Walk walk;      // violating conflicting walk when infeasible
  int cost2 = 0;  // its cost in halves
};
SeparationResult separation(const Instance& inst, const std::vector<int>& x2);

// Vertices reachable by a zero-cost implicational walk under the cover x2:
// flags every t with an implicational walk W ending at t whose vertices all
// carry weight zero. Zero-cost propagation over (vertex, implied value)
// states; requires tracked ground truth.
std::vector<char> reachable_zero(const Instance& inst, const std::vector<int>& x2);

// Exhaustive minimum half-integral cover: enumerates x in {0, 1/2, 1}^V.
// Returns the optimal value (halves) and every optimal cover.
struct BruteCoverResult {
  int value2 = 0;
  std::vector<std::vector<int>> covers;
};
BruteCoverResult brute_min_cover(const Instance& inst, int max_n = 14);

// Exhaustive minimum deletion set of size <= k whose removal leaves the
// constraints satisfiable by some extension of the partial assignment.
// Optional inclusion/exclusion constraints restrict the searched sets.
std::optional<std::vector<Vertex>> brute_min_deletion(const Instance& inst, int k,
                                                      const std::vector<Vertex>& must_include = {},
                                                      const std::vector<Vertex>& must_avoid = {});

// Satisfiability of the instance restricted to the non-deleted vertices.
bool deletion_satisfiable(const Instance& inst, const std::vector<char>& deleted);

}  // namespace zoa
