#pragma once

// Independent reference predicates for the concrete deletion problems. These
// share no code with the library's structural checkers: exhaustive
// assignment/orientation enumeration and explicit simple-cycle enumeration on
// tiny graphs. Deleted vertex sets are bitmasks over the problem's vertices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "zoa/problems.hpp"
#include "zoa/verify.hpp"

namespace zoa::testrefs {

using Mask = uint32_t;

inline std::vector<Vertex> to_set(int n, Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; v++)
    if ((m >> v) & 1u) out.push_back(v);
  return out;
}

inline bool alive(Mask del, Vertex v) { return !((del >> v) & 1u); }

inline bool ref_nulc(const NulcProblem& p, Mask del) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < p.n; v++)
    if (alive(del, v)) vs.push_back(v);
  std::vector<Value> val(static_cast<size_t>(p.n), 0);
  std::vector<Value> odo(vs.size(), 0);
  while (true) {
    for (size_t i = 0; i < vs.size(); i++) val[static_cast<size_t>(vs[i])] = odo[i];
    bool ok = true;
    for (const auto& e : p.edges)
      if (alive(del, e.u) && alive(del, e.v) &&
          e.perm[static_cast<size_t>(val[static_cast<size_t>(e.u)])] !=
              val[static_cast<size_t>(e.v)])
        ok = false;
    if (ok) return true;
    size_t i = 0;
    while (i < vs.size() && ++odo[i] == p.sigma) odo[i++] = 0;
    if (i == vs.size()) return false;
  }
}

inline bool ref_tfd(const TwoFanProblem& p, Mask del) {
  int n = static_cast<int>(p.domains.size());
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < n; v++)
    if (alive(del, v)) vs.push_back(v);
  std::vector<Value> val(static_cast<size_t>(n), 0);
  std::vector<Value> odo(vs.size(), 0);
  while (true) {
    for (size_t i = 0; i < vs.size(); i++) val[static_cast<size_t>(vs[i])] = odo[i];
    bool ok = true;
    for (const auto& f : p.fans)
      if (alive(del, f.u) && alive(del, f.v) && val[static_cast<size_t>(f.u)] != f.a &&
          val[static_cast<size_t>(f.v)] != f.b)
        ok = false;
    if (ok) return true;
    size_t i = 0;
    while (i < vs.size() && ++odo[i] == p.domains[static_cast<size_t>(vs[i])]) odo[i++] = 0;
    if (i == vs.size()) return false;
  }
}

inline bool ref_mod(const MonoOrientProblem& p, Mask del) {
  std::vector<ColoredEdge> es;
  for (const auto& e : p.edges)
    if (alive(del, e.u) && alive(del, e.v)) es.push_back(e);
  size_t m = es.size();
  for (Mask o = 0; o < (1u << m); o++) {
    std::vector<int> incoming(static_cast<size_t>(p.n), -1);
    bool ok = true;
    for (size_t i = 0; i < m && ok; i++) {
      Vertex head = ((o >> i) & 1u) ? es[i].u : es[i].v;
      int& c = incoming[static_cast<size_t>(head)];
      if (c >= 0 && c != es[i].color) ok = false;
      c = es[i].color;
    }
    if (ok) return true;
  }
  return m == 0;
}

inline bool ref_mwc(const MultiwayCutProblem& p, Mask del) {
  std::vector<std::vector<Vertex>> adj(static_cast<size_t>(p.n));
  for (auto [u, v] : p.edges)
    if (alive(del, u) && alive(del, v)) {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
  std::vector<int> comp(static_cast<size_t>(p.n), -1);
  int nc = 0;
  for (Vertex r = 0; r < p.n; r++) {
    if (!alive(del, r) || comp[static_cast<size_t>(r)] >= 0) continue;
    comp[static_cast<size_t>(r)] = nc;
    std::vector<Vertex> bfs{r};
    for (size_t h = 0; h < bfs.size(); h++)
      for (Vertex w : adj[static_cast<size_t>(bfs[h])])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = nc;
          bfs.push_back(w);
        }
    nc++;
  }
  std::vector<char> seen(static_cast<size_t>(nc), 0);
  for (Vertex t : p.terminals) {
    if (!alive(del, t)) return false;
    int c = comp[static_cast<size_t>(t)];
    if (seen[static_cast<size_t>(c)]) return false;
    seen[static_cast<size_t>(c)] = 1;
  }
  return true;
}

inline bool ref_spd(const SubsetPseudoforestProblem& p, Mask del) {
  auto bfs_labels = [&](bool all_edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(p.n));
    for (const auto& e : p.edges)
      if ((all_edges || !e.in_s) && alive(del, e.u) && alive(del, e.v)) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
      }
    std::vector<Vertex> rep(static_cast<size_t>(p.n), -1);
    for (Vertex r = 0; r < p.n; r++) {
      if (!alive(del, r) || rep[static_cast<size_t>(r)] >= 0) continue;
      rep[static_cast<size_t>(r)] = r;
      std::vector<Vertex> bfs{r};
      for (size_t h = 0; h < bfs.size(); h++)
        for (Vertex w : adj[static_cast<size_t>(bfs[h])])
          if (rep[static_cast<size_t>(w)] < 0) {
            rep[static_cast<size_t>(w)] = r;
            bfs.push_back(w);
          }
    }
    return rep;
  };
  std::vector<Vertex> comp = bfs_labels(true), cls = bfs_labels(false);
  std::vector<int> ecnt(static_cast<size_t>(p.n), 0), vcnt(static_cast<size_t>(p.n), 0);
  for (const auto& e : p.edges)
    if (e.in_s && alive(del, e.u) && alive(del, e.v))
      ecnt[static_cast<size_t>(comp[static_cast<size_t>(e.u)])]++;
  for (Vertex v = 0; v < p.n; v++)
    if (alive(del, v) && cls[static_cast<size_t>(v)] == v)
      vcnt[static_cast<size_t>(comp[static_cast<size_t>(v)])]++;
  for (int i = 0; i < p.n; i++)
    if (ecnt[static_cast<size_t>(i)] > vcnt[static_cast<size_t>(i)]) return false;
  return true;
}

// Enumerates every simple cycle (vertex-simple, no repeated edge id) of the
// surviving multigraph as a sequence of (edge id, traversed v->u) steps.
// Rotations and reflections repeat; callers only test a property of each.
struct RawEdge {
  Vertex u, v;
};
inline void each_cycle(int n, const std::vector<RawEdge>& es, Mask del,
                       const std::function<void(const std::vector<std::pair<int, bool>>&)>& cb) {
  std::vector<std::vector<std::pair<int, Vertex>>> adj(static_cast<size_t>(n));
  for (size_t i = 0; i < es.size(); i++) {
    if (!alive(del, es[i].u) || !alive(del, es[i].v)) continue;
    adj[static_cast<size_t>(es[i].u)].push_back({static_cast<int>(i), es[i].v});
    if (es[i].u != es[i].v)
      adj[static_cast<size_t>(es[i].v)].push_back({static_cast<int>(i), es[i].u});
  }
  std::vector<char> used_e(es.size(), 0), used_v(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, bool>> seq;
  Vertex s = 0;
  std::function<void(Vertex)> rec = [&](Vertex u) {
    for (auto [e, to] : adj[static_cast<size_t>(u)]) {
      if (used_e[static_cast<size_t>(e)]) continue;
      bool rev = es[static_cast<size_t>(e)].u != u;
      if (to == s) {
        seq.push_back({e, rev});
        cb(seq);
        seq.pop_back();
      } else if (to > s && !used_v[static_cast<size_t>(to)]) {
        used_e[static_cast<size_t>(e)] = 1;
        used_v[static_cast<size_t>(to)] = 1;
        seq.push_back({e, rev});
        rec(to);
        seq.pop_back();
        used_v[static_cast<size_t>(to)] = 0;
        used_e[static_cast<size_t>(e)] = 0;
      }
    }
  };
  for (s = 0; s < n; s++) {
    if (!alive(del, s)) continue;
    used_v[static_cast<size_t>(s)] = 1;
    rec(s);
    used_v[static_cast<size_t>(s)] = 0;
  }
}

inline bool ref_sfvs(const SubsetFvsProblem& p, Mask del) {
  std::vector<RawEdge> es;
  for (const auto& e : p.edges) es.push_back({e.u, e.v});
  bool ok = true;
  each_cycle(p.n, es, del, [&](const std::vector<std::pair<int, bool>>& c) {
    for (const auto& st : c)
      if (p.edges[static_cast<size_t>(st.first)].in_s) ok = false;
  });
  return ok;
}

inline bool ref_nmct(const NonMonoProblem& p, Mask del) {
  std::vector<RawEdge> es;
  for (const auto& e : p.edges) es.push_back({e.u, e.v});
  bool ok = true;
  each_cycle(p.n, es, del, [&](const std::vector<std::pair<int, bool>>& c) {
    int first = p.edges[static_cast<size_t>(c[0].first)].color;
    for (const auto& st : c)
      if (p.edges[static_cast<size_t>(st.first)].color != first) ok = false;
  });
  return ok;
}

inline bool ref_gfvs(const GroupFvsProblem& p, Mask del) {
  std::vector<RawEdge> es;
  for (const auto& e : p.edges) es.push_back({e.u, e.v});
  bool ok = true;
  each_cycle(p.n, es, del, [&](const std::vector<std::pair<int, bool>>& c) {
    int64_t acc = p.group->identity();
    for (auto [e, rev] : c) {
      int64_t lab = p.edges[static_cast<size_t>(e)].label;
      acc = p.group->op(acc, rev ? p.group->inverse(lab) : lab);
    }
    if (acc != p.group->identity()) ok = false;
  });
  return ok;
}

// Reference predicate dispatch plus the deletable-vertex mask (terminals of a
// multiway-cut problem must survive).
inline Mask deletable_mask(const ProblemInstance& pi, int n) {
  Mask m = n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1u;
  if (const auto* p = std::get_if<MultiwayCutProblem>(&pi))
    for (Vertex t : p->terminals) m &= ~(Mask{1} << t);
  return m;
}

inline int problem_n(const ProblemInstance& pi) {
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TwoFanProblem>)
          return static_cast<int>(p.domains.size());
        else if constexpr (std::is_same_v<T, GenericProblem>)
          return p.inst.n();
        else
          return p.n;
      },
      pi);
}

inline bool ref_satisfied(const ProblemInstance& pi, Mask del) {
  return std::visit(
      [&](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NulcProblem>) return ref_nulc(p, del);
        else if constexpr (std::is_same_v<T, TwoFanProblem>) return ref_tfd(p, del);
        else if constexpr (std::is_same_v<T, MonoOrientProblem>) return ref_mod(p, del);
        else if constexpr (std::is_same_v<T, SubsetPseudoforestProblem>) return ref_spd(p, del);
        else if constexpr (std::is_same_v<T, MultiwayCutProblem>) return ref_mwc(p, del);
        else if constexpr (std::is_same_v<T, GroupFvsProblem>) return ref_gfvs(p, del);
        else if constexpr (std::is_same_v<T, SubsetFvsProblem>) return ref_sfvs(p, del);
        else if constexpr (std::is_same_v<T, NonMonoProblem>) return ref_nmct(p, del);
        else {
          std::vector<char> d(static_cast<size_t>(p.inst.n()), 0);
          for (Vertex v = 0; v < p.inst.n(); v++)
            if (!alive(del, v)) d[static_cast<size_t>(v)] = 1;
          return deletion_satisfiable(p.inst, d);
        }
      },
      pi);
}

}  // namespace zoa::testrefs
