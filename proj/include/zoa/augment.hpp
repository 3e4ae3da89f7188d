#pragma once

#include "zoa/search.hpp"

namespace zoa {

// Alternating paths are handled as explicit segment lists: segments at even
// indices (0, 2, ...) are free paths, segments at odd indices lie inside a
// packed structure. Structure data (containing structure, positions,
// forward/backward parts) is always looked up freshly from the packing.
using Segments = std::vector<Walk>;

// Splits a search-produced walk into alternating segments.
Segments split_segments(const BasicPacking& y, const Walk& w);

// Grows the packing by 1/2 or 1 using the found augmenting path or pair.
// Returns the gain in halves.
int augment(const Instance& inst, const Oracle& o, BasicPacking& y, const SearchResult& found);

}  // namespace zoa
