#include "zoa/generate.hpp"

#include <algorithm>
#include <random>

namespace zoa {

namespace {

using Rng = std::mt19937_64;

int rint(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// Spanning tree on n vertices plus `extra` uniformly random edges (which may
// repeat pairs or form self-loops; the encoders normalize those).
std::vector<std::pair<Vertex, Vertex>> random_graph(Rng& rng, int n, int extra) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex v = 1; v < n; v++) es.push_back({static_cast<Vertex>(rint(rng, 0, v - 1)), v});
  for (int i = 0; i < extra; i++)
    es.push_back({static_cast<Vertex>(rint(rng, 0, n - 1)), static_cast<Vertex>(rint(rng, 0, n - 1))});
  return es;
}

std::vector<Value> random_perm(Rng& rng, int sigma) {
  std::vector<Value> p(static_cast<size_t>(sigma));
  for (Value i = 0; i < sigma; i++) p[static_cast<size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ProblemInstance gen_chain(Rng& rng, const GenOptions& opt) {
  int m = std::max(1, opt.size);
  GenericProblem p;
  p.k = opt.k;
  p.inst = Instance(m + 1);
  for (Vertex v = 0; v <= m; v++) p.inst.set_domain(v, 2);
  int parity = 0;
  for (int i = 0; i < m; i++) {
    if (rng() & 1u) {
      p.inst.add_perm(i, i + 1, {1, 0});
      parity ^= 1;
    } else {
      p.inst.add_identity(i, i + 1);
    }
  }
  p.inst.set_phi(0, 0);
  p.inst.set_phi(m, 1 - parity);  // one conflict along the whole chain
  return p;
}

ProblemInstance gen_grid(Rng&, const GenOptions& opt) {
  int w = std::max(2, (opt.size + 2) / 5);
  GenericProblem p;
  p.k = opt.k;
  p.inst = Instance(3 * w);
  auto id = [&](int r, int c) { return static_cast<Vertex>(r * w + c); };
  for (Vertex v = 0; v < 3 * w; v++) p.inst.set_domain(v, 2);
  for (int r = 0; r < 3; r++)
    for (int c = 0; c + 1 < w; c++) p.inst.add_identity(id(r, c), id(r, c + 1));
  for (int r = 0; r + 1 < 3; r++)
    for (int c = 0; c < w; c++) p.inst.add_identity(id(r, c), id(r + 1, c));
  p.inst.set_phi(id(0, 0), 0);
  p.inst.set_phi(id(2, w - 1), 1);
  return p;
}

ProblemInstance gen_theta(Rng& rng, const GenOptions& opt) {
  int len = std::max(2, opt.size / 3);  // edges per hub-to-hub strand
  GenericProblem p;
  p.k = opt.k;
  // Vertices: hub u = 0, hub v = 1, three strands of len-1 inner vertices,
  // plus one assigned pendant on u.
  int n = 2 + 3 * (len - 1) + 1;
  p.inst = Instance(n);
  for (Vertex x = 0; x < n; x++) p.inst.set_domain(x, 2);
  int next = 2;
  const int strand_parity[3] = {0, 1, 1};
  for (int s = 0; s < 3; s++) {
    int parity = 0;
    Vertex prev = 0;
    for (int i = 0; i < len; i++) {
      Vertex cur = (i == len - 1) ? 1 : next++;
      bool swap = (i == len - 1) ? (parity != strand_parity[s]) : ((rng() & 1u) != 0);
      if (swap) {
        p.inst.add_perm(prev, cur, {1, 0});
        parity ^= 1;
      } else {
        p.inst.add_identity(prev, cur);
      }
      prev = cur;
    }
  }
  Vertex a = static_cast<Vertex>(n - 1);
  p.inst.add_identity(a, 0);
  p.inst.set_phi(a, 0);
  return p;
}

ProblemInstance gen_zoa(Rng& rng, const GenOptions& opt, int extra) {
  int n = std::max(2, opt.size);
  int d = rint(rng, 2, 3);
  GenericProblem p;
  p.k = opt.k;
  p.inst = Instance(n);
  for (Vertex v = 0; v < n; v++) p.inst.set_domain(v, d);
  for (auto [u, v] : random_graph(rng, n, extra)) {
    if (u == v || p.inst.find_edge(u, v) != kNoEdge) continue;  // native instances are simple
    switch (rint(rng, 0, 2)) {
      case 0:
        p.inst.add_identity(u, v);
        break;
      case 1:
        p.inst.add_perm(u, v, random_perm(rng, d));
        break;
      default:
        p.inst.add_fan(u, v, rint(rng, 0, d - 1), rint(rng, 0, d - 1));
        break;
    }
  }
  int num_a = rint(rng, 0, 2);
  std::vector<Vertex> vs(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; v++) vs[static_cast<size_t>(v)] = v;
  std::shuffle(vs.begin(), vs.end(), rng);
  for (int i = 0; i < num_a; i++) p.inst.set_phi(vs[static_cast<size_t>(i)], rint(rng, 0, d - 1));
  return p;
}

}  // namespace

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> fams = {"nulc", "tfd",  "mod",   "spd",  "mwc",  "gfvs",
                                                "sfvs", "nmct", "zoa",   "chain", "grid", "theta"};
  return fams;
}

ProblemInstance generate(const std::string& family, uint64_t seed, const GenOptions& opt) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(family) + 1);
  int n = std::max(2, opt.size);
  int extra = opt.extra >= 0 ? opt.extra : std::max(0, opt.size / 2);

  if (family == "chain") return gen_chain(rng, opt);
  if (family == "grid") return gen_grid(rng, opt);
  if (family == "theta") return gen_theta(rng, opt);
  if (family == "zoa") return gen_zoa(rng, opt, extra);

  if (family == "nulc") {
    NulcProblem p;
    p.n = n;
    p.sigma = rint(rng, 2, 3);
    p.k = opt.k;
    for (auto [u, v] : random_graph(rng, n, extra)) p.edges.push_back({u, v, random_perm(rng, p.sigma)});
    return p;
  }
  if (family == "tfd") {
    TwoFanProblem p;
    p.k = opt.k;
    for (int v = 0; v < n; v++) p.domains.push_back(rint(rng, 1, 3));
    for (auto [u, v] : random_graph(rng, n, extra))
      p.fans.push_back({u, v, rint(rng, 0, p.domains[static_cast<size_t>(u)] - 1),
                        rint(rng, 0, p.domains[static_cast<size_t>(v)] - 1)});
    return p;
  }
  if (family == "mod" || family == "nmct") {
    int colors = rint(rng, 1, 3);
    std::vector<ColoredEdge> es;
    for (auto [u, v] : random_graph(rng, n, extra)) es.push_back({u, v, rint(rng, 0, colors - 1)});
    if (family == "mod") {
      MonoOrientProblem p;
      p.n = n;
      p.num_colors = colors;
      p.edges = std::move(es);
      p.k = opt.k;
      return p;
    }
    NonMonoProblem p;
    p.n = n;
    p.num_colors = colors;
    p.edges = std::move(es);
    p.k = opt.k;
    return p;
  }
  if (family == "spd" || family == "sfvs") {
    std::vector<SubsetEdge> es;
    for (auto [u, v] : random_graph(rng, n, extra)) es.push_back({u, v, (rng() & 1u) != 0});
    if (family == "spd") {
      SubsetPseudoforestProblem p;
      p.n = n;
      p.edges = std::move(es);
      p.k = opt.k;
      return p;
    }
    SubsetFvsProblem p;
    p.n = n;
    p.edges = std::move(es);
    p.k = opt.k;
    return p;
  }
  if (family == "mwc") {
    MultiwayCutProblem p;
    p.n = n;
    p.k = opt.k;
    int t = std::min(n, rint(rng, 2, 3));
    std::vector<Vertex> vs(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; v++) vs[static_cast<size_t>(v)] = v;
    std::shuffle(vs.begin(), vs.end(), rng);
    p.terminals.assign(vs.begin(), vs.begin() + t);
    p.edges = random_graph(rng, n, extra);
    return p;
  }
  if (family == "gfvs") {
    GroupFvsProblem p;
    p.n = n;
    p.k = opt.k;
    int64_t q = rint(rng, 2, 3);
    p.group = std::make_shared<CyclicGroup>(q);
    for (auto [u, v] : random_graph(rng, n, extra))
      p.edges.push_back({u, v, static_cast<int64_t>(rng() % static_cast<uint64_t>(q))});
    return p;
  }
  throw InputError("unknown generator family: " + family);
}

}  // namespace zoa
