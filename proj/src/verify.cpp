#include "zoa/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace zoa {

namespace {

struct StateKey {
  Vertex v;
  Value d;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  size_t operator()(const StateKey& s) const {
    return std::hash<int64_t>()((static_cast<int64_t>(s.v) << 34) ^ s.d);
  }
};

}  // namespace

SeparationResult separation(const Instance& inst, const std::vector<int>& x2) {
  if (!inst.tracks_ground_truth()) throw InputError("separation requires tracked ground truth");
  if (static_cast<int>(x2.size()) < inst.n()) throw InputError("cover array too short");

  std::unordered_map<StateKey, int, StateHash> dist;
  std::unordered_map<StateKey, StateKey, StateHash> parent;
  using QItem = std::pair<int, StateKey>;
  auto cmp = [](const QItem& a, const QItem& b) { return a.first > b.first; };
  std::priority_queue<QItem, std::vector<QItem>, decltype(cmp)> pq(cmp);

  for (Vertex a : inst.a_vertices()) {
    Value p = inst.phi(a);
    if (p == kUnknownPhi) throw InputError("separation requires concrete assignments");
    StateKey s{a, p};
    int c = x2[static_cast<size_t>(a)];
    auto it = dist.find(s);
    if (it == dist.end() || it->second > c) {
      dist[s] = c;
      pq.push({c, s});
    }
  }

  SeparationResult best;
  StateKey best_state{-1, 0};
  while (!pq.empty()) {
    auto [c, s] = pq.top();
    pq.pop();
    if (dist.at(s) != c) continue;
    if (inst.in_A(s.v) && s.d != inst.phi(s.v)) {
      // Conflicting walk ending here; shortest-first order makes it minimal.
      best_state = s;
      best.feasible = false;
      best.cost2 = c;
      break;
    }
    for (DirEdge e : inst.adjacent(s.v)) {
      Value nd = inst.apply(e, s.d);
      if (nd == kAll) continue;
      Vertex u = inst.head(e);
      StateKey ns{u, nd};
      int nc = c + x2[static_cast<size_t>(u)];
      auto it = dist.find(ns);
      if (it == dist.end() || it->second > nc) {
        dist[ns] = nc;
        parent[ns] = s;
        pq.push({nc, ns});
      }
    }
  }
  if (best.feasible || best.cost2 >= 2) return SeparationResult{};

  Walk rev;
  StateKey cur = best_state;
  while (true) {
    rev.push_back(cur.v);
    auto it = parent.find(cur);
    if (it == parent.end()) break;
    cur = it->second;
  }
  best.walk = Walk(rev.rbegin(), rev.rend());
  return best;
}

std::vector<char> reachable_zero(const Instance& inst, const std::vector<int>& x2) {
  if (!inst.tracks_ground_truth())
    throw InputError("zero-cost reachability requires tracked ground truth");
  std::vector<char> reach(static_cast<size_t>(inst.n()), 0);
  std::unordered_map<StateKey, char, StateHash> seen;
  std::vector<StateKey> stack;
  for (Vertex a : inst.a_vertices()) {
    if (x2[static_cast<size_t>(a)] != 0) continue;
    Value p = inst.phi(a);
    if (p == kUnknownPhi) throw InputError("zero-cost reachability requires concrete assignments");
    StateKey s{a, p};
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateKey s = stack.back();
    stack.pop_back();
    reach[static_cast<size_t>(s.v)] = 1;
    for (DirEdge e : inst.adjacent(s.v)) {
      Vertex u = inst.head(e);
      if (x2[static_cast<size_t>(u)] != 0) continue;
      Value nd = inst.apply(e, s.d);
      if (nd == kAll) continue;
      StateKey ns{u, nd};
      if (!seen[ns]) {
        seen[ns] = 1;
        stack.push_back(ns);
      }
    }
  }
  return reach;
}

BruteCoverResult brute_min_cover(const Instance& inst, int max_n) {
  int n = inst.n();
  if (n > max_n) throw InputError("instance too large for exhaustive cover enumeration");
  std::vector<int> x2(static_cast<size_t>(n), 0);
  BruteCoverResult out;
  out.value2 = 2 * n + 1;
  while (true) {
    int total = 0;
    for (int v = 0; v < n; v++) total += x2[static_cast<size_t>(v)];
    if (total <= out.value2 && separation(inst, x2).feasible) {
      if (total < out.value2) {
        out.value2 = total;
        out.covers.clear();
      }
      out.covers.push_back(x2);
    }
    // next assignment in {0,1,2}^n
    int i = 0;
    while (i < n && x2[static_cast<size_t>(i)] == 2) x2[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    x2[static_cast<size_t>(i)]++;
  }
  return out;
}

namespace {

bool edge_ok(const Instance& inst, DirEdge d, Value p, Value r) {
  Value iv = inst.apply(d, p);
  return iv == kAll || iv == r;
}

bool bijective_kind(CKind k) {
  return k == CKind::Perm || k == CKind::GroupLabel || k == CKind::Transparent;
}

// Satisfiability of one connected component by backtracking in BFS order.
bool component_sat(const Instance& inst, const std::vector<char>& deleted,
                   const std::vector<Vertex>& comp) {
  bool all_bijective = true;
  bool has_group = false;
  for (Vertex v : comp) {
    if (inst.domain(v) == kGroupDomain) has_group = true;
    for (DirEdge d : inst.adjacent(v))
      if (!deleted[static_cast<size_t>(inst.head(d))] &&
          !bijective_kind(inst.edge(edge_id(d)).c.kind))
        all_bijective = false;
  }

  auto check_assignment = [&](const std::unordered_map<Vertex, Value>& val) {
    for (Vertex v : comp)
      for (DirEdge d : inst.adjacent(v)) {
        Vertex u = inst.head(d);
        if (deleted[static_cast<size_t>(u)]) continue;
        if (!edge_ok(inst, d, val.at(v), val.at(u))) return false;
      }
    for (Vertex v : comp)
      if (inst.in_A(v) && val.at(v) != inst.phi(v)) return false;
    return true;
  };

  auto propagate_from = [&](Vertex root, Value rv, std::unordered_map<Vertex, Value>& val) {
    val.clear();
    val[root] = rv;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (DirEdge d : inst.adjacent(v)) {
        Vertex u = inst.head(d);
        if (deleted[static_cast<size_t>(u)] || val.count(u)) continue;
        Value iv = inst.apply(d, val[v]);
        if (iv == kAll) return false;  // cannot happen for bijective kinds
        val[u] = iv;
        stack.push_back(u);
      }
    }
    return true;
  };

  if (all_bijective) {
    // One propagation pass pins the whole component given a root value.
    Vertex root = comp[0];
    for (Vertex v : comp)
      if (inst.in_A(v)) {
        root = v;
        break;
      }
    std::unordered_map<Vertex, Value> val;
    if (inst.in_A(root)) {
      Value p = inst.phi(root);
      if (p == kUnknownPhi) throw InputError("brute satisfiability requires concrete assignments");
      return propagate_from(root, p, val) && check_assignment(val);
    }
    if (inst.domain(root) == kGroupDomain)
      return propagate_from(root, inst.group()->identity(), val) && check_assignment(val);
    for (Value p = 0; p < inst.domain(root); p++)
      if (propagate_from(root, p, val) && check_assignment(val)) return true;
    return false;
  }

  if (has_group) throw InputError("mixed group/finite component in brute satisfiability");

  // Backtracking over finite domains.
  std::vector<Vertex> order(comp);
  std::unordered_map<Vertex, int> pos;
  for (size_t i = 0; i < order.size(); i++) pos[order[i]] = static_cast<int>(i);
  std::unordered_map<Vertex, Value> val;
  auto consistent = [&](Vertex v) {
    if (inst.in_A(v) && val[v] != inst.phi(v)) return false;
    for (DirEdge d : inst.adjacent(v)) {
      Vertex u = inst.head(d);
      if (deleted[static_cast<size_t>(u)] || !val.count(u) || pos[u] > pos[v]) continue;
      if (!edge_ok(inst, d, val[v], val[u])) return false;
      if (!edge_ok(inst, reverse_dir(d), val[u], val[v])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == order.size()) return true;
    Vertex v = order[i];
    Value lo = 0, hi = inst.domain(v);
    if (inst.in_A(v)) {
      if (inst.phi(v) == kUnknownPhi) throw InputError("brute satisfiability requires concrete assignments");
      lo = inst.phi(v);
      hi = lo + 1;
    }
    for (Value p = lo; p < hi; p++) {
      val[v] = p;
      if (consistent(v) && self(self, i + 1)) return true;
    }
    val.erase(v);
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool deletion_satisfiable(const Instance& inst, const std::vector<char>& deleted) {
  int n = inst.n();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (Vertex s = 0; s < n; s++) {
    if (deleted[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t i = 0; i < comp.size(); i++)
      for (DirEdge d : inst.adjacent(comp[i])) {
        Vertex u = inst.head(d);
        if (deleted[static_cast<size_t>(u)] || seen[static_cast<size_t>(u)]) continue;
        seen[static_cast<size_t>(u)] = 1;
        comp.push_back(u);
      }
    if (!component_sat(inst, deleted, comp)) return false;
  }
  return true;
}

namespace {

bool combos(std::vector<Vertex>& pick, size_t want, size_t from, const std::vector<Vertex>& cand,
            const std::function<bool(const std::vector<Vertex>&)>& fn) {
  if (pick.size() == want) return fn(pick);
  if (from >= cand.size()) return false;
  for (size_t i = from; cand.size() - i >= want - pick.size(); i++) {
    pick.push_back(cand[i]);
    if (combos(pick, want, i + 1, cand, fn)) return true;
    pick.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> brute_min_deletion(const Instance& inst, int k,
                                                      const std::vector<Vertex>& must_include,
                                                      const std::vector<Vertex>& must_avoid) {
  int n = inst.n();
  if (n > 20) throw InputError("instance too large for exhaustive deletion search");
  std::vector<char> forced(static_cast<size_t>(n), 0), banned(static_cast<size_t>(n), 0);
  for (Vertex v : must_include) forced[static_cast<size_t>(v)] = 1;
  for (Vertex v : must_avoid) banned[static_cast<size_t>(v)] = 1;
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < n; v++)
    if (!forced[static_cast<size_t>(v)] && !banned[static_cast<size_t>(v)]) cand.push_back(v);
  int base = static_cast<int>(must_include.size());
  if (base > k) return std::nullopt;

  std::vector<char> deleted(static_cast<size_t>(n), 0);
  for (Vertex v : must_include) deleted[static_cast<size_t>(v)] = 1;
  std::optional<std::vector<Vertex>> result;
  std::function<bool(const std::vector<Vertex>&)> attempt = [&](const std::vector<Vertex>& pick) {
    for (Vertex v : pick) deleted[static_cast<size_t>(v)] = 1;
    bool ok = deletion_satisfiable(inst, deleted);
    if (ok) {
      std::vector<Vertex> x(must_include);
      x.insert(x.end(), pick.begin(), pick.end());
      std::sort(x.begin(), x.end());
      result = std::move(x);
    }
    for (Vertex v : pick) deleted[static_cast<size_t>(v)] = 0;
    return ok;
  };
  for (int extra = 0; base + extra <= k; extra++) {
    std::vector<Vertex> pick;
    if (combos(pick, static_cast<size_t>(extra), 0, cand, attempt)) return result;
  }
  return std::nullopt;
}

}  // namespace zoa
