#pragma once

#include "zoa/augment.hpp"

namespace zoa {

// Alternating search + augmentation until the packing is maximum (or a size
// cap is exceeded). Afterwards the engine holds the boundary tables of the
// final failed search, from which the matching minimum cover is read off.
class LpSolver {
public:
  LpSolver(const Instance& inst, const Oracle& o) : inst_(&inst), o_(&o), eng_(inst, o, y_) {}
  LpSolver(const LpSolver&) = delete;
  LpSolver& operator=(const LpSolver&) = delete;

  // cap2 < 0 disables the cap. Returns false when the packing exceeded cap2
  // halves, certifying that the minimum cover is larger than cap2/2.
  bool run(int cap2 = -1) {
    while (true) {
      eng_.prepare();
      SearchResult r = eng_.run();
      if (r.kind == SearchResult::None) return true;
      augment(*inst_, *o_, y_, r);
      rounds_++;
      if (cap2 >= 0 && y_.size2() > cap2) return false;
    }
  }

  BasicPacking& packing() { return y_; }
  SearchEngine& engine() { return eng_; }
  int augmentations() const { return rounds_; }

  // Minimum cover in halves as a dense array (valid after run() == true).
  std::vector<int> cover2() const {
    std::vector<int> x2(static_cast<size_t>(inst_->n()), 0);
    for (auto [v, w] : eng_.extract_cover2()) x2[static_cast<size_t>(v)] += w;
    return x2;
  }

private:
  const Instance* inst_;
  const Oracle* o_;
  BasicPacking y_;
  SearchEngine eng_;
  int rounds_ = 0;
};

}  // namespace zoa
