#include "zoa/farthest.hpp"

namespace zoa {

namespace {

// Ground-truth values implied along a structure line from its assigned end,
// computed incrementally (one propagation step per position) so a whole line
// costs time linear in its length. kUnknownPhi when the instance is untracked.
class PrefixPhi {
public:
  PrefixPhi(const Instance& inst, const std::vector<Vertex>& line, bool from_back)
      : inst_(&inst), line_(&line), from_back_(from_back) {
    pos_ = from_back ? static_cast<int>(line.size()) - 1 : 0;
    val_ = inst.tracks_ground_truth() ? inst.phi((*line_)[static_cast<size_t>(pos_)])
                                      : kUnknownPhi;
  }

  // Value at position i, which must move monotonically away from the start.
  Value at(int i) {
    if (val_ == kUnknownPhi) return kUnknownPhi;
    int step = from_back_ ? -1 : 1;
    while (pos_ != i) {
      Vertex u = (*line_)[static_cast<size_t>(pos_)];
      Vertex v = (*line_)[static_cast<size_t>(pos_ + step)];
      val_ = inst_->apply(inst_->find_edge(u, v), val_);
      if (val_ == kAll) throw InternalError("packed structure prefix is not implicational");
      pos_ += step;
    }
    return val_;
  }

private:
  const Instance* inst_;
  const std::vector<Vertex>* line_;
  bool from_back_;
  int pos_;
  Value val_;
};

// One contraction-restart round at vertex t with the given prefix state.
// Returns true when the restarted search failed (boundary advanced; table
// updates and the contraction are kept) and false when it found an augmenting
// structure (search state and instance rewound).
//
// The rewind replays the search from scratch: run() seeds sources in
// a_vertices order, which is the base assignments followed by the kept
// contractions in creation order — exactly the sequence that produced the
// current state, so the deterministic search reproduces it. Rewinds happen at
// most once per structure side, keeping the total cost linear.
bool advance(Instance& inst, const Oracle& o, SearchEngine& eng, const BasicPacking& y, Vertex t,
             Value phi_value, OState token) {
  if (eng.visited(t)) throw InternalError("contraction target was already visited");
  Vertex tp = inst.add_contraction(t, phi_value, token);
  SearchResult r = eng.run_from(tp);
  if (r.kind == SearchResult::None) return true;
  inst.pop_contraction();
  eng = SearchEngine(inst, o, y);
  eng.prepare();
  if (eng.run().kind != SearchResult::None)
    throw InternalError("replayed search found an augmenting structure");
  return false;
}

}  // namespace

FarthestResult farthest_cover(Instance& inst, const Oracle& o, int cap2) {
  FarthestResult out;
  LpSolver lp(inst, o);
  if (!lp.run(cap2)) {
    out.within_cap = false;
    out.y = std::move(lp.packing());
    return out;
  }
  SearchEngine& eng = lp.engine();
  const BasicPacking& y = lp.packing();
  int kept = 0;

  for (int sid : y.alive_ids()) {
    const Structure& s = y.at(sid);
    if (s.is_wheel) continue;
    const std::vector<Vertex>& line = s.path;
    PrefixPhi fwd_phi(inst, line, false);
    while (eng.path_a(sid) < eng.path_b(sid)) {
      int i = eng.path_a(sid) + 1;
      if (!advance(inst, o, eng, y, line[static_cast<size_t>(i)], fwd_phi.at(i),
                   eng.fwd_state(sid, i)))
        break;
      kept++;
      if (eng.path_a(sid) < i) throw InternalError("failed restart left the front boundary behind");
    }
    PrefixPhi bwd_phi(inst, line, true);
    while (eng.path_a(sid) < eng.path_b(sid)) {
      int i = eng.path_b(sid) - 1;
      if (!advance(inst, o, eng, y, line[static_cast<size_t>(i)], bwd_phi.at(i),
                   eng.bwd_state(sid, i)))
        break;
      kept++;
      if (eng.path_b(sid) > i) throw InternalError("failed restart left the back boundary behind");
    }
  }
  for (int sid : y.alive_ids()) {
    const Structure& s = y.at(sid);
    if (!s.is_wheel) continue;
    for (size_t j = 0; j < s.wheel.spokes.size(); j++) {
      const std::vector<Vertex>& line = s.wheel.spokes[j];
      int hub = static_cast<int>(line.size()) - 1;
      int jj = static_cast<int>(j);
      PrefixPhi sp_phi(inst, line, false);
      while (eng.spoke_a(sid, jj) < hub) {
        int i = eng.spoke_a(sid, jj) + 1;
        if (!advance(inst, o, eng, y, line[static_cast<size_t>(i)], sp_phi.at(i),
                     eng.spoke_state(sid, jj, i)))
          break;
        kept++;
        if (eng.spoke_a(sid, jj) < i)
          throw InternalError("failed restart left the spoke boundary behind");
      }
    }
  }

  out.within_cap = true;
  out.x2.assign(static_cast<size_t>(inst.base_n()), 0);
  for (auto [v, w] : eng.extract_cover2()) out.x2[static_cast<size_t>(v)] += w;
  out.y = std::move(lp.packing());
  while (kept-- > 0) inst.pop_contraction();
  return out;
}

}  // namespace zoa
