#include "zoa/problems.hpp"

#include <algorithm>
#include <set>

namespace zoa {

namespace {

// ---------------------------------------------------------------------------
// Encoding helpers

// Instance under construction together with the witness-reporting metadata.
struct Build {
  Instance inst;
  std::vector<Vertex> origin;
  std::vector<char> artificial;

  explicit Build(int n) : inst(n) {
    origin.resize(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; v++) origin[static_cast<size_t>(v)] = v;
    artificial.assign(static_cast<size_t>(n), 0);
  }

  Vertex aux(int dom, Vertex report) {
    Vertex w = inst.add_vertex(dom);
    inst.set_label(w, w);  // oracles key their states on vertex labels
    origin.push_back(report);
    artificial.push_back(1);
    return w;
  }
};

// Adds the constraint main(u, v) on a simple graph, subdividing when the pair
// is a duplicate or a self-loop. rest(x, y) supplies the pass-through
// constraint for the extra legs; subdivision vertices report the lower
// endpoint of their edge.
template <class Main, class Rest>
void add_norm(Build& b, Vertex u, Vertex v, int aux_dom, Main&& main, Rest&& rest) {
  if (u == v) {
    Vertex w1 = b.aux(aux_dom, u), w2 = b.aux(aux_dom, u);
    main(u, w1);
    rest(w1, w2);
    rest(w2, u);
  } else if (b.inst.find_edge(u, v) != kNoEdge) {
    Vertex w = b.aux(aux_dom, std::min(u, v));
    main(u, w);
    rest(w, v);
  } else {
    main(u, v);
  }
}

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) throw InputError("vertex id out of range");
}

template <class P>
void check_budget(const P& p) {
  if (p.k < 0) throw InputError("negative budget");
}

Encoded encode_nulc(const NulcProblem& p) {
  check_budget(p);
  if (p.sigma <= 0) throw InputError("alphabet must be non-empty");
  Build b(p.n);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, p.sigma);
  for (const auto& e : p.edges) {
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    if (static_cast<int>(e.perm.size()) != p.sigma) throw InputError("permutation size mismatch");
    std::vector<char> hit(static_cast<size_t>(p.sigma), 0);
    for (Value x : e.perm) {
      if (x < 0 || x >= p.sigma || hit[static_cast<size_t>(x)])
        throw InputError("permutation is not a bijection");
      hit[static_cast<size_t>(x)] = 1;
    }
    add_norm(
        b, e.u, e.v, p.sigma, [&](Vertex x, Vertex y) { b.inst.add_perm(x, y, e.perm); },
        [&](Vertex x, Vertex y) { b.inst.add_identity(x, y); });
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::Generic;
  return out;
}

Encoded encode_tfd(const TwoFanProblem& p) {
  check_budget(p);
  int n = static_cast<int>(p.domains.size());
  Build b(n);
  for (Vertex v = 0; v < n; v++) {
    if (p.domains[static_cast<size_t>(v)] <= 0) throw InputError("empty domain");
    b.inst.set_domain(v, p.domains[static_cast<size_t>(v)]);
  }
  for (const auto& f : p.fans) {
    check_vertex(f.u, n);
    check_vertex(f.v, n);
    if (f.a < 0 || f.a >= b.inst.domain(f.u) || f.b < 0 || f.b >= b.inst.domain(f.v))
      throw InputError("pinned value out of domain");
    add_norm(
        b, f.u, f.v, b.inst.domain(f.v),
        [&](Vertex x, Vertex y) { b.inst.add_fan(x, y, f.a, f.b); },
        [&](Vertex x, Vertex y) { b.inst.add_identity(x, y); });
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::TwoFan;
  return out;
}

Encoded encode_mod(const MonoOrientProblem& p) {
  check_budget(p);
  if (p.num_colors <= 0 && !p.edges.empty()) throw InputError("colored edges need colors");
  int dom = std::max(1, p.num_colors);
  Build b(p.n);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, dom);
  for (const auto& e : p.edges) {
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    if (e.color < 0 || e.color >= p.num_colors) throw InputError("edge color out of range");
    add_norm(
        b, e.u, e.v, dom, [&](Vertex x, Vertex y) { b.inst.add_fan(x, y, e.color, e.color); },
        [&](Vertex x, Vertex y) { b.inst.add_identity(x, y); });
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::TwoFan;
  return out;
}

Encoded encode_spd(const SubsetPseudoforestProblem& p) {
  check_budget(p);
  int s_count = 0;
  for (const auto& e : p.edges) s_count += e.in_s ? 1 : 0;
  int dom = std::max(1, s_count);
  Build b(p.n);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, dom);
  int s_idx = 0;
  for (const auto& e : p.edges) {
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    auto rest = [&](Vertex x, Vertex y) { b.inst.add_identity(x, y); };
    if (e.in_s) {
      Value s = s_idx++;
      add_norm(b, e.u, e.v, dom, [&](Vertex x, Vertex y) { b.inst.add_fan(x, y, s, s); }, rest);
    } else {
      add_norm(b, e.u, e.v, dom, rest, rest);
    }
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::TwoFan;
  return out;
}

Encoded encode_mwc(const MultiwayCutProblem& p) {
  check_budget(p);
  std::vector<int> tindex(static_cast<size_t>(p.n), -1);
  for (size_t i = 0; i < p.terminals.size(); i++) {
    Vertex t = p.terminals[i];
    check_vertex(t, p.n);
    if (tindex[static_cast<size_t>(t)] >= 0) throw InputError("duplicate terminal");
    tindex[static_cast<size_t>(t)] = static_cast<int>(i);
  }
  Encoded out;
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::Generic;
  // Deduplicate and drop self-loops: neither affects connectivity.
  std::set<std::pair<Vertex, Vertex>> simple;
  for (auto [u, v] : p.edges) {
    check_vertex(u, p.n);
    check_vertex(v, p.n);
    if (u == v) continue;
    if (tindex[static_cast<size_t>(u)] >= 0 && tindex[static_cast<size_t>(v)] >= 0) {
      out.trivially_no = true;  // adjacent terminals cannot be separated
      return out;
    }
    simple.insert({std::min(u, v), std::max(u, v)});
  }
  int dom = std::max(1, static_cast<int>(p.terminals.size()));
  std::vector<Vertex> map(static_cast<size_t>(p.n), -1);
  int nn = 0;
  for (Vertex v = 0; v < p.n; v++)
    if (tindex[static_cast<size_t>(v)] < 0) map[static_cast<size_t>(v)] = nn++;
  Build b(nn);
  for (Vertex v = 0; v < p.n; v++)
    if (map[static_cast<size_t>(v)] >= 0) {
      b.inst.set_domain(map[static_cast<size_t>(v)], dom);
      b.origin[static_cast<size_t>(map[static_cast<size_t>(v)])] = v;
    }
  for (auto [u, v] : simple) {
    // A terminal endpoint becomes a fresh assigned copy attached to the other
    // endpoint; the copy reports that endpoint when it lands in a witness.
    Vertex eu, ev;
    if (tindex[static_cast<size_t>(u)] >= 0) {
      eu = b.aux(dom, v);
      b.inst.set_phi(eu, tindex[static_cast<size_t>(u)]);
    } else {
      eu = map[static_cast<size_t>(u)];
    }
    if (tindex[static_cast<size_t>(v)] >= 0) {
      ev = b.aux(dom, u);
      b.inst.set_phi(ev, tindex[static_cast<size_t>(v)]);
    } else {
      ev = map[static_cast<size_t>(v)];
    }
    b.inst.add_identity(eu, ev);
  }
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  return out;
}

Encoded encode_gfvs(const GroupFvsProblem& p) {
  check_budget(p);
  if (!p.group) throw InputError("missing group");
  int64_t id = p.group->identity();
  Build b(p.n);
  b.inst.set_group(p.group);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, kGroupDomain);
  for (const auto& e : p.edges) {
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    add_norm(
        b, e.u, e.v, kGroupDomain,
        [&](Vertex x, Vertex y) { b.inst.add_group_edge(x, y, e.label); },
        [&](Vertex x, Vertex y) { b.inst.add_group_edge(x, y, id); });
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::Group;
  return out;
}

Encoded encode_sfvs(const SubsetFvsProblem& p) {
  check_budget(p);
  int s_count = 0;
  for (const auto& e : p.edges) s_count += e.in_s ? 1 : 0;
  // Ground truth: XOR over one generator per S-edge (bitmask when it fits).
  GroupPtr g;
  std::shared_ptr<XorSetGroup> sets;
  if (s_count <= 63) {
    g = std::make_shared<XorMaskGroup>();
  } else {
    sets = std::make_shared<XorSetGroup>();
    g = sets;
  }
  Build b(p.n);
  b.inst.set_group(g);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, kGroupDomain);
  int64_t id = g->identity();
  int s_idx = 0;
  for (size_t ei = 0; ei < p.edges.size(); ei++) {
    const auto& e = p.edges[ei];
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    auto rest = [&](Vertex x, Vertex y) { b.inst.add_group_edge(x, y, id); };
    if (e.in_s) {
      int64_t lab = sets ? sets->intern({s_idx}) : (int64_t{1} << s_idx);
      s_idx++;
      add_norm(
          b, e.u, e.v, kGroupDomain,
          [&](Vertex x, Vertex y) {
            int ne = b.inst.add_group_edge(x, y, lab);
            b.inst.edge_mut(ne).in_s = true;
            b.inst.edge_mut(ne).label = static_cast<int64_t>(ei);
          },
          rest);
    } else {
      add_norm(b, e.u, e.v, kGroupDomain, rest, rest);
    }
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<SubsetFvsOracle>();
  out.strategy = Strategy::Group;
  return out;
}

Encoded encode_nmct(const NonMonoProblem& p) {
  check_budget(p);
  if (p.num_colors <= 0 && !p.edges.empty()) throw InputError("colored edges need colors");
  auto g = std::make_shared<XorSetGroup>();
  Build b(p.n);
  b.inst.set_group(g);
  for (Vertex v = 0; v < p.n; v++) b.inst.set_domain(v, kGroupDomain);
  int64_t L = p.num_colors;
  // Group label of a colored leg: the XOR of one generator per (endpoint,
  // color) pair, so a cycle multiplies to identity exactly when every vertex
  // on it sees one color.
  auto colored = [&](Vertex x, Vertex y, int c) {
    std::vector<int64_t> gen{x * L + c, y * L + c};
    std::sort(gen.begin(), gen.end());
    int ne = b.inst.add_group_edge(x, y, g->intern(std::move(gen)));
    b.inst.edge_mut(ne).color = c;
  };
  for (const auto& e : p.edges) {
    check_vertex(e.u, p.n);
    check_vertex(e.v, p.n);
    if (e.color < 0 || e.color >= p.num_colors) throw InputError("edge color out of range");
    // Both legs keep the original color: cycles through the edge keep their
    // color multiset, which is what the mono/non-mono distinction depends on.
    auto leg = [&](Vertex x, Vertex y) { colored(x, y, e.color); };
    add_norm(b, e.u, e.v, kGroupDomain, leg, leg);
  }
  Encoded out;
  out.inst = std::move(b.inst);
  out.origin = std::move(b.origin);
  out.artificial = std::move(b.artificial);
  out.oracle = std::make_shared<NonMonoOracle>(p.num_colors);
  out.strategy = Strategy::Group;
  return out;
}

Encoded encode_generic(const GenericProblem& p) {
  check_budget(p);
  Encoded out;
  out.inst = p.inst;
  out.origin.resize(static_cast<size_t>(p.inst.n()));
  for (Vertex v = 0; v < p.inst.n(); v++) out.origin[static_cast<size_t>(v)] = v;
  out.artificial.assign(static_cast<size_t>(p.inst.n()), 0);
  out.oracle = std::make_shared<NaiveOracle>();
  out.strategy = Strategy::Auto;
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicate checkers

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; i++) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

std::vector<char> deleted_flags(int n, const std::vector<Vertex>& deleted) {
  std::vector<char> del(static_cast<size_t>(n), 0);
  for (Vertex v : deleted) {
    check_vertex(v, n);
    del[static_cast<size_t>(v)] = 1;
  }
  return del;
}

bool check_mwc(const MultiwayCutProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  std::vector<char> term(static_cast<size_t>(p.n), 0);
  for (Vertex t : p.terminals) {
    if (del[static_cast<size_t>(t)]) return false;  // terminals are undeletable
    term[static_cast<size_t>(t)] = 1;
  }
  Dsu d(p.n);
  for (auto [u, v] : p.edges)
    if (!del[static_cast<size_t>(u)] && !del[static_cast<size_t>(v)]) d.unite(u, v);
  std::vector<char> seen(static_cast<size_t>(p.n), 0);
  for (Vertex t : p.terminals) {
    int r = d.find(t);
    if (seen[static_cast<size_t>(r)]) return false;
    seen[static_cast<size_t>(r)] = 1;
  }
  return true;
}

bool check_sfvs(const SubsetFvsProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  Dsu d(p.n);
  for (const auto& e : p.edges)
    if (!e.in_s && !del[static_cast<size_t>(e.u)] && !del[static_cast<size_t>(e.v)])
      d.unite(e.u, e.v);
  for (const auto& e : p.edges) {
    if (!e.in_s || del[static_cast<size_t>(e.u)] || del[static_cast<size_t>(e.v)]) continue;
    if (!d.unite(e.u, e.v)) return false;  // the S-edge closes a cycle
  }
  return true;
}

bool check_spd(const SubsetPseudoforestProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  Dsu contract(p.n);
  for (const auto& e : p.edges)
    if (!e.in_s && !del[static_cast<size_t>(e.u)] && !del[static_cast<size_t>(e.v)])
      contract.unite(e.u, e.v);
  // Components of the contracted graph, then per-component counts of
  // contracted vertices and surviving S-edges.
  Dsu comp(p.n);
  for (const auto& e : p.edges)
    if (e.in_s && !del[static_cast<size_t>(e.u)] && !del[static_cast<size_t>(e.v)])
      comp.unite(contract.find(e.u), contract.find(e.v));
  std::vector<int> ecnt(static_cast<size_t>(p.n), 0), vcnt(static_cast<size_t>(p.n), 0);
  for (const auto& e : p.edges)
    if (e.in_s && !del[static_cast<size_t>(e.u)] && !del[static_cast<size_t>(e.v)])
      ecnt[static_cast<size_t>(comp.find(contract.find(e.u)))]++;
  for (Vertex v = 0; v < p.n; v++)
    if (!del[static_cast<size_t>(v)] && contract.find(v) == v)
      vcnt[static_cast<size_t>(comp.find(v))]++;
  for (int i = 0; i < p.n; i++)
    if (ecnt[static_cast<size_t>(i)] > vcnt[static_cast<size_t>(i)]) return false;
  return true;
}

bool check_gfvs(const GroupFvsProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  const Group& g = *p.group;
  struct Arc {
    Vertex to;
    int64_t lab;
  };
  std::vector<std::vector<Arc>> adj(static_cast<size_t>(p.n));
  for (const auto& e : p.edges) {
    if (del[static_cast<size_t>(e.u)] || del[static_cast<size_t>(e.v)]) continue;
    adj[static_cast<size_t>(e.u)].push_back({e.v, e.label});
    adj[static_cast<size_t>(e.v)].push_back({e.u, g.inverse(e.label)});
  }
  std::vector<char> seen(static_cast<size_t>(p.n), 0);
  std::vector<int64_t> val(static_cast<size_t>(p.n), 0);
  for (Vertex r = 0; r < p.n; r++) {
    if (del[static_cast<size_t>(r)] || seen[static_cast<size_t>(r)]) continue;
    seen[static_cast<size_t>(r)] = 1;
    val[static_cast<size_t>(r)] = g.identity();
    std::vector<Vertex> bfs{r};
    for (size_t h = 0; h < bfs.size(); h++) {
      Vertex u = bfs[h];
      for (const Arc& a : adj[static_cast<size_t>(u)]) {
        int64_t w = g.op(val[static_cast<size_t>(u)], a.lab);
        if (!seen[static_cast<size_t>(a.to)]) {
          seen[static_cast<size_t>(a.to)] = 1;
          val[static_cast<size_t>(a.to)] = w;
          bfs.push_back(a.to);
        } else if (val[static_cast<size_t>(a.to)] != w) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every block (biconnected component) with at least two edges must be
// monochromatic; bridges and self-loops cannot lie on a non-mono cycle.
bool check_nmct(const NonMonoProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  struct HalfEdge {
    Vertex to;
    int id;
  };
  std::vector<std::vector<HalfEdge>> adj(static_cast<size_t>(p.n));
  std::vector<int> color_of;
  int m = 0;
  for (const auto& e : p.edges) {
    if (del[static_cast<size_t>(e.u)] || del[static_cast<size_t>(e.v)] || e.u == e.v) continue;
    adj[static_cast<size_t>(e.u)].push_back({e.v, m});
    adj[static_cast<size_t>(e.v)].push_back({e.u, m});
    color_of.push_back(e.color);
    m++;
  }
  std::vector<int> num(static_cast<size_t>(p.n), -1), low(static_cast<size_t>(p.n), 0);
  std::vector<int> estack;
  int timer = 0;
  // Iterative DFS over the surviving simple part; parallel edges share a
  // block, so they are handled by the same rule.
  struct Frame {
    Vertex v;
    int parent_edge;
    size_t it;
  };
  for (Vertex root = 0; root < p.n; root++) {
    if (del[static_cast<size_t>(root)] || num[static_cast<size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.it < adj[static_cast<size_t>(f.v)].size()) {
        HalfEdge h = adj[static_cast<size_t>(f.v)][f.it++];
        if (h.id == f.parent_edge) continue;
        if (num[static_cast<size_t>(h.to)] < 0) {
          estack.push_back(h.id);
          num[static_cast<size_t>(h.to)] = low[static_cast<size_t>(h.to)] = timer++;
          stack.push_back({h.to, h.id, 0});
        } else if (num[static_cast<size_t>(h.to)] < num[static_cast<size_t>(f.v)]) {
          estack.push_back(h.id);
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(h.to)]);
        }
      } else {
        Vertex v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        Vertex u = stack.back().v;
        low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= num[static_cast<size_t>(u)]) {
          // Pop one block and check its colors.
          int first_color = -1;
          int block_edges = 0;
          bool mono = true;
          while (!estack.empty()) {
            int id = estack.back();
            estack.pop_back();
            block_edges++;
            if (first_color < 0)
              first_color = color_of[static_cast<size_t>(id)];
            else if (color_of[static_cast<size_t>(id)] != first_color)
              mono = false;
            if (id == pe) break;
          }
          if (block_edges >= 2 && !mono) return false;
        }
      }
    }
  }
  return true;
}

bool check_nulc(const NulcProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  struct Arc {
    Vertex to;
    const std::vector<Value>* fwd;
  };
  std::vector<std::vector<Arc>> adj(static_cast<size_t>(p.n));
  std::vector<std::vector<Value>> invs;
  invs.reserve(p.edges.size());
  for (const auto& e : p.edges) {
    if (del[static_cast<size_t>(e.u)] || del[static_cast<size_t>(e.v)]) continue;
    std::vector<Value> inv(static_cast<size_t>(p.sigma));
    for (Value x = 0; x < p.sigma; x++) inv[static_cast<size_t>(e.perm[static_cast<size_t>(x)])] = x;
    invs.push_back(std::move(inv));
    adj[static_cast<size_t>(e.u)].push_back({e.v, &e.perm});
    adj[static_cast<size_t>(e.v)].push_back({e.u, &invs.back()});
  }
  std::vector<int> comp(static_cast<size_t>(p.n), -1);
  for (Vertex r = 0; r < p.n; r++) {
    if (del[static_cast<size_t>(r)] || comp[static_cast<size_t>(r)] >= 0) continue;
    std::vector<Vertex> members{r};
    comp[static_cast<size_t>(r)] = r;
    for (size_t h = 0; h < members.size(); h++)
      for (const Arc& a : adj[static_cast<size_t>(members[h])])
        if (comp[static_cast<size_t>(a.to)] < 0) {
          comp[static_cast<size_t>(a.to)] = r;
          members.push_back(a.to);
        }
    bool ok = false;
    std::vector<Value> val(static_cast<size_t>(p.n), -1);
    for (Value start = 0; start < p.sigma && !ok; start++) {
      for (Vertex v : members) val[static_cast<size_t>(v)] = -1;
      val[static_cast<size_t>(r)] = start;
      std::vector<Vertex> bfs{r};
      ok = true;
      for (size_t h = 0; h < bfs.size() && ok; h++) {
        Vertex u = bfs[h];
        for (const Arc& a : adj[static_cast<size_t>(u)]) {
          Value w = (*a.fwd)[static_cast<size_t>(val[static_cast<size_t>(u)])];
          if (val[static_cast<size_t>(a.to)] < 0) {
            val[static_cast<size_t>(a.to)] = w;
            bfs.push_back(a.to);
          } else if (val[static_cast<size_t>(a.to)] != w) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool check_tfd(const TwoFanProblem& p, const std::vector<Vertex>& deleted) {
  int n = static_cast<int>(p.domains.size());
  std::vector<char> del = deleted_flags(n, deleted);
  TwoFanProblem q;
  std::vector<Vertex> map(static_cast<size_t>(n), -1);
  for (Vertex v = 0; v < n; v++)
    if (!del[static_cast<size_t>(v)]) {
      map[static_cast<size_t>(v)] = static_cast<Vertex>(q.domains.size());
      q.domains.push_back(p.domains[static_cast<size_t>(v)]);
    }
  for (const auto& f : p.fans)
    if (!del[static_cast<size_t>(f.u)] && !del[static_cast<size_t>(f.v)])
      q.fans.push_back({map[static_cast<size_t>(f.u)], map[static_cast<size_t>(f.v)], f.a, f.b});
  Encoded enc = encode_tfd(q);
  auto phi = satisfying_assignment(enc.inst, Strategy::TwoFan);
  if (!phi) return false;
  for (const auto& f : q.fans)
    if ((*phi)[static_cast<size_t>(f.u)] != f.a && (*phi)[static_cast<size_t>(f.v)] != f.b)
      throw InternalError("assignment does not satisfy a surviving two-fan");
  return true;
}

bool check_mod(const MonoOrientProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.n, deleted);
  MonoOrientProblem q;
  q.num_colors = p.num_colors;
  std::vector<Vertex> map(static_cast<size_t>(p.n), -1);
  for (Vertex v = 0; v < p.n; v++)
    if (!del[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = q.n++;
  for (const auto& e : p.edges)
    if (!del[static_cast<size_t>(e.u)] && !del[static_cast<size_t>(e.v)])
      q.edges.push_back({map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)], e.color});
  Encoded enc = encode_mod(q);
  auto phi = satisfying_assignment(enc.inst, Strategy::TwoFan);
  if (!phi) return false;
  // Build the orientation from the assignment and check it structurally:
  // direct each edge toward an endpoint whose value is the edge's color.
  std::vector<int> incoming(static_cast<size_t>(q.n), -1);
  for (const auto& e : q.edges) {
    Vertex head;
    if ((*phi)[static_cast<size_t>(e.u)] == e.color)
      head = e.u;
    else if ((*phi)[static_cast<size_t>(e.v)] == e.color)
      head = e.v;
    else
      throw InternalError("assignment does not orient a surviving edge");
    int& c = incoming[static_cast<size_t>(head)];
    if (c >= 0 && c != e.color) throw InternalError("orientation has mixed incoming colors");
    c = e.color;
  }
  return true;
}

bool check_generic(const GenericProblem& p, const std::vector<Vertex>& deleted) {
  std::vector<char> del = deleted_flags(p.inst.n(), deleted);
  Residual r = make_residual(p.inst);
  for (Vertex v = 0; v < p.inst.n(); v++) {
    if (!del[static_cast<size_t>(v)]) continue;
    Vertex cur = -1;
    for (Vertex w = 0; w < r.inst.n(); w++)
      if (r.orig[static_cast<size_t>(w)] == v) cur = w;
    if (cur < 0) throw InternalError("lost a vertex while restricting");
    r = residual_delete(r, cur);
  }
  auto phi = satisfying_assignment(r.inst);
  if (!phi) return false;
  for (int e = 0; e < r.inst.m(); e++) {
    DirEdge d = forward_dir(e);
    Value iv = r.inst.apply(d, (*phi)[static_cast<size_t>(r.inst.tail(d))]);
    if (iv != kAll && iv != (*phi)[static_cast<size_t>(r.inst.head(d))])
      throw InternalError("assignment violates a constraint");
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Encoded encode(const ProblemInstance& p) {
  return std::visit(
      [](const auto& q) -> Encoded {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, NulcProblem>) return encode_nulc(q);
        else if constexpr (std::is_same_v<T, TwoFanProblem>) return encode_tfd(q);
        else if constexpr (std::is_same_v<T, MonoOrientProblem>) return encode_mod(q);
        else if constexpr (std::is_same_v<T, SubsetPseudoforestProblem>) return encode_spd(q);
        else if constexpr (std::is_same_v<T, MultiwayCutProblem>) return encode_mwc(q);
        else if constexpr (std::is_same_v<T, GroupFvsProblem>) return encode_gfvs(q);
        else if constexpr (std::is_same_v<T, SubsetFvsProblem>) return encode_sfvs(q);
        else if constexpr (std::is_same_v<T, NonMonoProblem>) return encode_nmct(q);
        else return encode_generic(q);
      },
      p);
}

bool problem_satisfied(const ProblemInstance& p, const std::vector<Vertex>& deleted) {
  return std::visit(
      [&](const auto& q) -> bool {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, NulcProblem>) return check_nulc(q, deleted);
        else if constexpr (std::is_same_v<T, TwoFanProblem>) return check_tfd(q, deleted);
        else if constexpr (std::is_same_v<T, MonoOrientProblem>) return check_mod(q, deleted);
        else if constexpr (std::is_same_v<T, SubsetPseudoforestProblem>) return check_spd(q, deleted);
        else if constexpr (std::is_same_v<T, MultiwayCutProblem>) return check_mwc(q, deleted);
        else if constexpr (std::is_same_v<T, GroupFvsProblem>) return check_gfvs(q, deleted);
        else if constexpr (std::is_same_v<T, SubsetFvsProblem>) return check_sfvs(q, deleted);
        else if constexpr (std::is_same_v<T, NonMonoProblem>) return check_nmct(q, deleted);
        else return check_generic(q, deleted);
      },
      p);
}

std::vector<Vertex> decode_witness(const ProblemInstance& p, const Encoded& enc,
                                   const std::vector<Vertex>& witness) {
  std::vector<Vertex> out;
  for (Vertex w : witness) {
    if (w < 0 || static_cast<size_t>(w) >= enc.origin.size())
      throw InternalError("witness vertex outside the encoded instance");
    out.push_back(enc.origin[static_cast<size_t>(w)]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!problem_satisfied(p, out))
    throw InternalError("decoded witness fails the problem predicate");
  return out;
}

int problem_budget(const ProblemInstance& p) {
  return std::visit([](const auto& q) { return q.k; }, p);
}

void set_problem_budget(ProblemInstance& p, int k) {
  std::visit([&](auto& q) { q.k = k; }, p);
}

SolveResult solve_problem(const ProblemInstance& p, int k) {
  Encoded enc = encode(p);
  if (enc.trivially_no) {
    SolveResult r;
    r.yes = false;
    return r;
  }
  SolveResult r = solve_deletion(enc.inst, *enc.oracle, k, enc.strategy);
  if (r.yes) r.witness = decode_witness(p, enc, r.witness);
  return r;
}

std::optional<std::vector<Value>> satisfying_assignment(const Instance& inst, Strategy s) {
  int n = inst.n();
  if (!inst.tracks_ground_truth()) throw InputError("assignment extraction needs ground truth");
  std::vector<Value> val(static_cast<size_t>(n), kUnknownPhi);
  // Propagates from the given starts; returns false on a contradiction with
  // any already-known value.
  auto propagate = [&](std::vector<Vertex> bfs, std::vector<Value>& v) -> bool {
    for (size_t h = 0; h < bfs.size(); h++) {
      Vertex u = bfs[h];
      for (DirEdge d : inst.adjacent(u)) {
        Vertex head = inst.head(d);
        Value iv = inst.apply(d, v[static_cast<size_t>(u)]);
        if (iv == kAll) continue;
        Value& slot = v[static_cast<size_t>(head)];
        if (slot != kUnknownPhi) {
          if (slot != iv) return false;
          continue;
        }
        slot = iv;
        bfs.push_back(head);
      }
    }
    return true;
  };
  {
    std::vector<Vertex> starts;
    for (Vertex a : inst.a_vertices()) {
      if (inst.phi(a) == kUnknownPhi) throw InputError("assignment extraction needs ground truth");
      val[static_cast<size_t>(a)] = inst.phi(a);
      starts.push_back(a);
    }
    if (!propagate(std::move(starts), val)) return std::nullopt;
  }
  while (true) {
    Vertex u = -1;
    for (Vertex v = 0; v < n; v++)
      if (val[static_cast<size_t>(v)] == kUnknownPhi) {
        u = v;
        break;
      }
    if (u < 0) return val;
    // Candidate pins for the unassigned remainder (mirrors the branching
    // sets; a satisfying assignment survives at least one of them).
    std::vector<BranchOption> opts;
    Strategy eff = s;
    if (eff == Strategy::TwoFan || eff == Strategy::Auto) {
      for (int e = 0; e < inst.m() && opts.empty(); e++) {
        const Edge& ed = inst.edge(e);
        if (ed.c.kind == CKind::Fan && val[static_cast<size_t>(ed.u)] == kUnknownPhi &&
            val[static_cast<size_t>(ed.v)] == kUnknownPhi)
          opts = {{ed.u, ed.c.a}, {ed.v, ed.c.b}};
      }
      if (opts.empty() && eff == Strategy::TwoFan) eff = Strategy::Generic;
    }
    if (opts.empty()) {
      if (eff == Strategy::Group || (eff == Strategy::Auto && inst.domain(u) == kGroupDomain)) {
        if (!inst.group()) throw InputError("identity branching needs a group");
        opts = {{u, inst.group()->identity()}};
      } else {
        int dsz = inst.domain(u);
        if (dsz == kGroupDomain) throw InputError("cannot enumerate a group domain");
        for (Value a = 0; a < dsz; a++) opts.push_back({u, a});
      }
    }
    bool committed = false;
    for (const BranchOption& b : opts) {
      std::vector<Value> trial = val;
      trial[static_cast<size_t>(b.v)] = b.a;
      if (propagate({b.v}, trial)) {
        val = std::move(trial);
        committed = true;
        break;
      }
    }
    if (!committed) return std::nullopt;
  }
}

}  // namespace zoa
