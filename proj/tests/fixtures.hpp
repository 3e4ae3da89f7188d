#pragma once

#include <algorithm>
#include <random>

#include "zoa/instance.hpp"

namespace zoa::fixtures {

// Triangle u=0, v=1, w=2 over the group Z_2; edges uv, vw labeled 0 and wu
// labeled 1; assignment: u -> 0.
inline Instance z2_triangle() {
  Instance inst(3);
  inst.set_group(std::make_shared<CyclicGroup>(2));
  for (Vertex v = 0; v < 3; v++) inst.set_domain(v, kGroupDomain);
  inst.add_group_edge(0, 1, 0);
  inst.add_group_edge(1, 2, 0);
  inst.add_group_edge(2, 0, 1);
  inst.set_phi(0, 0);
  return inst;
}

// Star with center c=0 and terminals 1..3, each terminal split off to an
// attached assigned vertex 4..6 carrying its own terminal index; all edges
// are equality constraints over domain {0,1,2}.
inline Instance star_multiway() {
  Instance inst(7);
  for (Vertex v = 0; v < 7; v++) inst.set_domain(v, 3);
  for (Vertex t = 1; t <= 3; t++) {
    inst.add_identity(0, t);
    inst.add_identity(t, t + 3);
    inst.set_phi(t + 3, t - 1);
  }
  return inst;
}

// Path a=0, x=1, y=2, b=3 with equality constraints over domain {0,1};
// a -> 0 and b -> 1 conflict through the path.
inline Instance conflict_path() {
  Instance inst(4);
  for (Vertex v = 0; v < 4; v++) inst.set_domain(v, 2);
  inst.add_identity(0, 1);
  inst.add_identity(1, 2);
  inst.add_identity(2, 3);
  inst.set_phi(0, 0);
  inst.set_phi(3, 1);
  return inst;
}

// Four-cycle a=0, m1=1, b=2, m2=3 over domain {0,1}: all edges equality
// except b-m2 which swaps the two values; a -> 0, b -> 0.
inline Instance swap_cycle() {
  Instance inst(4);
  for (Vertex v = 0; v < 4; v++) inst.set_domain(v, 2);
  inst.add_identity(0, 1);
  inst.add_identity(1, 2);
  inst.add_perm(2, 3, {1, 0});
  inst.add_identity(3, 0);
  inst.set_phi(0, 0);
  inst.set_phi(2, 0);
  return inst;
}

// Random connected Z_q instance: every walk from an assigned vertex is
// implicational, which makes it convenient for equivalence properties.
inline Instance random_group_instance(std::mt19937& rng, int n, int extra_edges, int q, int num_a) {
  Instance inst(n);
  auto g = std::make_shared<CyclicGroup>(q);
  inst.set_group(g);
  for (Vertex v = 0; v < n; v++) inst.set_domain(v, kGroupDomain);
  std::uniform_int_distribution<int64_t> lab(0, q - 1);
  for (Vertex v = 1; v < n; v++) {
    std::uniform_int_distribution<Vertex> par(0, v - 1);
    inst.add_group_edge(par(rng), v, lab(rng));
  }
  for (int i = 0; i < extra_edges; i++) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    Vertex u = pick(rng), v = pick(rng);
    if (u == v || inst.find_edge(u, v) != kNoEdge) continue;
    inst.add_group_edge(u, v, lab(rng));
  }
  std::vector<Vertex> perm(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; v++) perm[static_cast<size_t>(v)] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < num_a && i < n; i++) inst.set_phi(perm[static_cast<size_t>(i)], lab(rng));
  return inst;
}

// Random connected finite-domain instance mixing identity, permutation, and
// two-fan constraints.
inline Instance random_cst_instance(std::mt19937& rng, int n, int extra_edges, int dsize,
                                    int num_a) {
  Instance inst(n);
  for (Vertex v = 0; v < n; v++) inst.set_domain(v, dsize);
  std::uniform_int_distribution<Value> val(0, dsize - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  auto add_edge = [&](Vertex u, Vertex v) {
    switch (kind(rng)) {
      case 0:
        inst.add_identity(u, v);
        break;
      case 1: {
        std::vector<Value> table(static_cast<size_t>(dsize));
        for (Value i = 0; i < dsize; i++) table[static_cast<size_t>(i)] = i;
        std::shuffle(table.begin(), table.end(), rng);
        inst.add_perm(u, v, std::move(table));
        break;
      }
      default:
        inst.add_fan(u, v, val(rng), val(rng));
        break;
    }
  };
  for (Vertex v = 1; v < n; v++) {
    std::uniform_int_distribution<Vertex> par(0, v - 1);
    add_edge(par(rng), v);
  }
  for (int i = 0; i < extra_edges; i++) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    Vertex u = pick(rng), v = pick(rng);
    if (u == v || inst.find_edge(u, v) != kNoEdge) continue;
    add_edge(u, v);
  }
  std::vector<Vertex> perm(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; v++) perm[static_cast<size_t>(v)] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < num_a && i < n; i++) inst.set_phi(perm[static_cast<size_t>(i)], val(rng));
  return inst;
}

// Random walk of the requested edge count starting at s; empty if stuck.
inline Walk random_walk(std::mt19937& rng, const Instance& inst, Vertex s, int len) {
  Walk w{s};
  for (int i = 0; i < len; i++) {
    const auto& adj = inst.adjacent(w.back());
    if (adj.empty()) return {};
    std::uniform_int_distribution<size_t> pick(0, adj.size() - 1);
    w.push_back(inst.head(adj[pick(rng)]));
  }
  return w;
}

}  // namespace zoa::fixtures
