#pragma once

#include "zoa/lp.hpp"

namespace zoa {

struct FarthestResult {
  bool within_cap = false;  // false: every cover is larger than cap2/2
  std::vector<int> x2;      // doubled weights on the base vertices
  BasicPacking y;           // maximum packing (certificate)
};

// Maximum packing plus a farthest minimum cover: after the packing is maximum,
// every structure boundary is pushed as far as possible by contracting the
// boundary prefix onto a fresh assigned vertex and restarting the search from
// it. Failed restarts keep their table updates and contractions; successful
// ones are rewound. cap2 < 0 disables the size cap.
//
// The instance is extended with contraction vertices during the run and
// restored to its original shape before returning.
FarthestResult farthest_cover(Instance& inst, const Oracle& o, int cap2 = -1);

}  // namespace zoa
