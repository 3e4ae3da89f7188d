#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zoa/oracle.hpp"

namespace zoa {

// Wheel: odd number of cycle arcs; arcs[i] runs from hub i to hub i+1
// (cyclically), spokes[i] runs from an A-vertex to hub i = arcs[i].front().
// A zero-length spoke is the single hub vertex.
struct Wheel {
  std::vector<std::vector<Vertex>> arcs;
  std::vector<std::vector<Vertex>> spokes;
  int degree() const { return static_cast<int>(arcs.size()); }
  Vertex hub(int i) const { return arcs[static_cast<size_t>(i)].front(); }
  // The full walk spokes[i] . arcs[i] . reverse(spokes[i+1]).
  Walk sector_walk(int i) const;
  // The half-integral cycle as a closed walk from hub 0.
  Walk cycle_walk() const;
};

struct Structure {
  bool alive = false;
  bool is_wheel = false;
  std::vector<Vertex> path;  // integral path when !is_wheel
  Wheel wheel;
};

struct Member {
  enum Role : uint8_t { Free, PathVert, SpokeVert, CycleVert };
  int sid = -1;
  Role role = Free;
  int idx = 0;  // spoke or arc index
  int pos = 0;  // position within path / spoke / arc (hub = spoke position)
};

// Basic packing: vertex-disjoint integral paths (weight 1) and wheels
// (cycle weight 1/2, spokes weight 1). All sizes in halves.
class BasicPacking {
public:
  int add_path(std::vector<Vertex> vs);
  int add_wheel(Wheel w);
  void remove(int sid);

  const Structure& at(int sid) const { return structs_[static_cast<size_t>(sid)]; }
  int num_slots() const { return static_cast<int>(structs_.size()); }
  std::vector<int> alive_ids() const;
  int size2() const { return size2_; }

  const Member& member(Vertex v) const {
    static const Member kFree{};
    if (v < 0 || static_cast<size_t>(v) >= member_.size()) return kFree;
    return member_[static_cast<size_t>(v)];
  }
  bool in_y(Vertex v) const { return member(v).role != Member::Free; }
  // Weight-1 vertices: integral paths and spokes (hubs included).
  bool in_v1(Vertex v) const {
    Member::Role r = member(v).role;
    return r == Member::PathVert || r == Member::SpokeVert;
  }
  int edge_weight2(Vertex u, Vertex v) const;
  bool edge_in_y(Vertex u, Vertex v) const { return edge_weight2(u, v) > 0; }
  int vertex_weight2(Vertex v) const;

  // Integral paths S_{i+1}.H_{i+1}.S_{i+2}^{-1}, ... of a wheel, skipping
  // sector `skip`; (d-1)/2 walks. Does not modify the packing.
  std::vector<Walk> decompose_wheel(int sid, int skip) const;

  // F/B navigation. Subpaths are given by (sid, endpoints inside the
  // structure); these helpers work on explicit vertex positions.
  // For a spoke vertex v: backward(v) from s(S) to v, forward(v) from t(S)
  // (the hub) to v.
  Walk spoke_backward(Vertex v) const;
  Walk spoke_forward(Vertex v) const;

private:
  void set_member(Vertex v, Member m);
  void clear_member(Vertex v);
  void add_edge_w(Vertex u, Vertex v, int w2);
  static int64_t ekey(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b);
  }
  void insert_members(int sid, int delta);

  std::vector<Structure> structs_;
  std::vector<Member> member_;
  std::unordered_map<int64_t, int> edge_w2_;
  int size2_ = 0;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;
};

// Checks structural conditions and conflict membership of every packed walk.
// Uses the oracle for conflict tests and, when ground truth is tracked,
// cross-checks with direct propagation.
ValidationReport validate_packing(const Instance& inst, const Oracle& o, const BasicPacking& y);

// Debug dump: `path v0 v1 ...` / `wheel d | cycle ... | spoke i: ...`.
std::string dump_packing(const BasicPacking& y);

}  // namespace zoa
