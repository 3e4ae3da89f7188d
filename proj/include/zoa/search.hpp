#pragma once

#include <utility>
#include <vector>

#include "zoa/packing.hpp"

namespace zoa {

struct SearchResult {
  enum Kind { None, Path, Pair };
  Kind kind = None;
  Walk path;   // augmenting path, or first member of the pair
  Walk path2;  // second member of the pair
};

// Breadth-first search for an augmenting path or pair over the current
// packing. Keeps per-structure boundary indices and per-vertex parent data;
// the whole engine can be copied to snapshot the search state.
class SearchEngine {
public:
  SearchEngine(const Instance& inst, const Oracle& o, const BasicPacking& y)
      : inst_(&inst), o_(&o), y_(&y) {}

  // Recomputes prefix states and resets boundary tables and visit marks.
  void prepare();
  // Recomputes the prefix states of one structure (after it changed) without
  // touching visit marks or the tables of other structures.
  void refresh_structure(int sid);
  // Resets the boundary tables of one structure to their initial values.
  void reset_structure_tables(int sid);

  // Full search over all unpacked assigned vertices.
  SearchResult run();
  // Restart from a single source (used with contracted instances). Visit
  // marks and boundary tables persist across calls.
  SearchResult run_from(Vertex s);

  bool visited(Vertex v) const {
    return static_cast<size_t>(v) < vis_.size() && vis_[static_cast<size_t>(v)].seen;
  }
  std::vector<Vertex> visited_vertices() const;

  // Cover read-off from the boundary tables; valid when the last search
  // returned no augmenting path/pair. Pairs are (vertex, weight in halves).
  std::vector<std::pair<Vertex, int>> extract_cover2() const;

  int path_a(int sid) const { return a_path_[static_cast<size_t>(sid)]; }
  int path_b(int sid) const { return b_path_[static_cast<size_t>(sid)]; }
  int spoke_a(int sid, int idx) const { return a_spoke_[static_cast<size_t>(sid)][static_cast<size_t>(idx)]; }

  // Precomputed prefix states: along an integral path from its front / back,
  // and along a spoke from its assigned end.
  OState fwd_state(int sid, int i) const { return fwd_[static_cast<size_t>(sid)][static_cast<size_t>(i)]; }
  OState bwd_state(int sid, int i) const { return bwd_[static_cast<size_t>(sid)][static_cast<size_t>(i)]; }
  OState spoke_state(int sid, int idx, int i) const {
    return spfx_[static_cast<size_t>(sid)][static_cast<size_t>(idx)][static_cast<size_t>(i)];
  }

private:
  struct VisitInfo {
    uint8_t seen = 0;
    DirEdge via = kNoEdge;  // edge that entered branch (kNoEdge for sources)
    Vertex branch = -1;     // entry vertex; differs from v for swept vertices
    OState tail = 0;        // oracle state of T(P(v))
  };

  SearchResult main_loop();
  void push(Vertex v, DirEdge via, Vertex branch, OState tail);
  Walk reconstruct(Vertex v) const;
  const std::vector<Vertex>& struct_line(const Member& m) const;

  const Instance* inst_;
  const Oracle* o_;
  const BasicPacking* y_;

  std::vector<VisitInfo> vis_;
  std::vector<Vertex> queue_;
  size_t qhead_ = 0;

  std::vector<int> a_path_, b_path_;
  std::vector<std::vector<int>> a_spoke_;
  std::vector<std::vector<OState>> fwd_, bwd_;            // integral paths
  std::vector<std::vector<std::vector<OState>>> spfx_;    // spokes
};

}  // namespace zoa
