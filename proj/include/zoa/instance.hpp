#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zoa/group.hpp"

namespace zoa {

using Vertex = int32_t;
using Value = int64_t;

// Propagation results. Domain values and group element ids are >= 0.
constexpr Value kAll = -1;
constexpr Value kNotImp = -2;
// Assignment value for an A-vertex whose ground truth is not tracked.
constexpr Value kUnknownPhi = -3;
// Domain-size marker for vertices ranging over a group's elements.
constexpr int kGroupDomain = -1;

enum class CKind : uint8_t {
  Perm,         // bijection D(u)->D(v), explicit tables
  Fan,          // (phi(u)=a) or (phi(v)=b)
  GroupLabel,   // pi(p) = p * lab, group handle on the instance
  Transparent,  // identity edge introduced by contraction
};

struct Constraint {
  CKind kind;
  std::vector<Value> fwd, inv;  // Perm
  Value a = 0, b = 0;           // Fan
  int64_t lab = 0, lab_inv = 0; // GroupLabel, u->v and v->u
};

struct Edge {
  Vertex u, v;
  Constraint c;
  int64_t label = -1;  // stable id from the original encoding
  int32_t color = -1;  // colored-graph problems
  bool in_s = false;   // S-membership (subset problems)
};

// Directed edge: edge id * 2, +1 when traversed v->u.
using DirEdge = int32_t;
constexpr DirEdge kNoEdge = -1;
inline int edge_id(DirEdge d) { return d >> 1; }
inline bool is_reversed(DirEdge d) { return d & 1; }
inline DirEdge forward_dir(int e) { return static_cast<DirEdge>(e << 1); }
inline DirEdge reverse_dir(DirEdge d) { return d ^ 1; }

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

using Walk = std::vector<Vertex>;

class Instance {
public:
  Instance() = default;
  explicit Instance(int n) { resize(n); }

  void resize(int n);
  int add_vertex(int domain_size, int64_t label = -1);
  void set_domain(Vertex v, int domain_size) { dom_.at(static_cast<size_t>(v)) = domain_size; }
  void set_label(Vertex v, int64_t label) { vlabel_.at(static_cast<size_t>(v)) = label; }
  void set_group(GroupPtr g) { group_ = std::move(g); }

  int add_perm(Vertex u, Vertex v, std::vector<Value> table);
  int add_identity(Vertex u, Vertex v);
  int add_fan(Vertex u, Vertex v, Value a, Value b);
  int add_group_edge(Vertex u, Vertex v, int64_t lab);
  // Requires v not already in A; phi may be kUnknownPhi when untracked.
  void set_phi(Vertex v, Value phi);
  void set_init_token(Vertex v, int64_t token);

  int n() const { return static_cast<int>(dom_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  int domain(Vertex v) const { return dom_[static_cast<size_t>(v)]; }
  int64_t label(Vertex v) const { return vlabel_[static_cast<size_t>(v)]; }
  bool in_A(Vertex v) const { return in_a_[static_cast<size_t>(v)] != 0; }
  Value phi(Vertex v) const { return phi_[static_cast<size_t>(v)]; }
  bool has_init_token(Vertex v) const { return has_token_[static_cast<size_t>(v)] != 0; }
  int64_t init_token(Vertex v) const { return token_[static_cast<size_t>(v)]; }
  const std::vector<Vertex>& a_vertices() const { return a_list_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  // For encoders: attach labels/colors/S-marks after creation.
  Edge& edge_mut(int e) { return edges_[static_cast<size_t>(e)]; }
  const std::vector<DirEdge>& adjacent(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
  const GroupPtr& group() const { return group_; }

  Vertex tail(DirEdge d) const { const Edge& e = edges_[static_cast<size_t>(edge_id(d))]; return is_reversed(d) ? e.v : e.u; }
  Vertex head(DirEdge d) const { const Edge& e = edges_[static_cast<size_t>(edge_id(d))]; return is_reversed(d) ? e.u : e.v; }
  // Directed edge u->v; kNoEdge if absent.
  DirEdge find_edge(Vertex u, Vertex v) const;

  // One propagation step along a directed edge. Returns kAll or a value.
  Value apply(DirEdge d, Value p) const;

  // Contraction support: fresh A-vertex t' joined to t by a transparent edge.
  Vertex add_contraction(Vertex t, Value phi_value, int64_t init_token);
  void pop_contraction();
  int base_n() const { return base_n_; }
  void mark_base() { base_n_ = n(); }

  // True if tracked phi values are available for ground-truth propagation.
  bool tracks_ground_truth() const { return tracks_ground_truth_; }
  void set_tracks_ground_truth(bool b) { tracks_ground_truth_ = b; }

private:
  int add_edge(Vertex u, Vertex v, Constraint c);
  static int64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b);
  }

  std::vector<int> dom_;
  std::vector<int64_t> vlabel_;
  std::vector<Value> phi_;
  std::vector<uint8_t> in_a_;
  std::vector<uint8_t> has_token_;
  std::vector<int64_t> token_;
  std::vector<Vertex> a_list_;
  std::vector<Edge> edges_;
  std::vector<std::vector<DirEdge>> adj_;
  std::unordered_map<int64_t, int> edge_index_;
  GroupPtr group_;
  int base_n_ = 0;
  bool tracks_ground_truth_ = true;
};

// Walk propagation from the walk's start value p (which need not be phi).
Value propagate_walk(const Instance& inst, std::span<const Vertex> w, Value p);
// imp of a walk under the partial assignment; kNotImp when not implicational.
Value imp_walk(const Instance& inst, std::span<const Vertex> w);
bool is_implicational(const Instance& inst, std::span<const Vertex> w);
bool is_conflicting(const Instance& inst, std::span<const Vertex> w);
// Pre: P, Q implicational with t(P)=t(Q).
bool equivalent(const Instance& inst, std::span<const Vertex> p, std::span<const Vertex> q);

Walk reversed(const Walk& w);
Walk concat(const Walk& a, const Walk& b);

}  // namespace zoa
