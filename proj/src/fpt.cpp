#include "zoa/fpt.hpp"

#include <algorithm>

namespace zoa {

namespace {

struct NewAssign {
  Vertex v;
  Value phi;
  bool has_tok = false;
  OState tok = 0;
};

// Compacted copy of the kept vertices with extra assignments applied.
// out_map (when given) receives the old-to-new vertex mapping (-1 = dropped).
Residual restrict_residual(const Residual& r, const std::vector<char>& keep,
                           const std::vector<NewAssign>& assigns,
                           std::vector<Vertex>* out_map = nullptr) {
  const Instance& src = r.inst;
  int n = src.n();
  std::vector<Vertex> map(static_cast<size_t>(n), -1);
  int nn = 0;
  for (Vertex v = 0; v < n; v++)
    if (keep[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = nn++;

  Residual out;
  out.inst.resize(nn);
  out.inst.set_tracks_ground_truth(src.tracks_ground_truth());
  if (src.group()) out.inst.set_group(src.group());
  out.orig.resize(static_cast<size_t>(nn));
  for (Vertex v = 0; v < n; v++) {
    Vertex w = map[static_cast<size_t>(v)];
    if (w < 0) continue;
    out.inst.set_domain(w, src.domain(v));
    out.inst.set_label(w, src.label(v));
    out.orig[static_cast<size_t>(w)] = r.orig[static_cast<size_t>(v)];
  }
  for (int e = 0; e < src.m(); e++) {
    const Edge& ed = src.edge(e);
    Vertex u = map[static_cast<size_t>(ed.u)], v = map[static_cast<size_t>(ed.v)];
    if (u < 0 || v < 0) continue;
    int ne;
    switch (ed.c.kind) {
      case CKind::Perm:
        ne = out.inst.add_perm(u, v, ed.c.fwd);
        break;
      case CKind::Fan:
        ne = out.inst.add_fan(u, v, ed.c.a, ed.c.b);
        break;
      case CKind::GroupLabel:
        ne = out.inst.add_group_edge(u, v, ed.c.lab);
        break;
      default:
        throw InternalError("residual copy hit a contraction edge");
    }
    Edge& ned = out.inst.edge_mut(ne);
    ned.label = ed.label;
    ned.color = ed.color;
    ned.in_s = ed.in_s;
  }
  for (Vertex a : src.a_vertices()) {
    Vertex w = map[static_cast<size_t>(a)];
    if (w < 0) continue;
    out.inst.set_phi(w, src.phi(a));
    if (src.has_init_token(a)) out.inst.set_init_token(w, src.init_token(a));
  }
  for (const NewAssign& na : assigns) {
    Vertex w = map[static_cast<size_t>(na.v)];
    if (w < 0) throw InternalError("assignment for a dropped vertex");
    out.inst.set_phi(w, na.phi);
    if (na.has_tok) out.inst.set_init_token(w, na.tok);
  }
  if (out_map) *out_map = std::move(map);
  return out;
}

// Is the constraint along directed edge d satisfied by the pair (p at the
// tail, q at the head)?
bool edge_satisfied(const Instance& inst, DirEdge d, Value p, Value q) {
  Value iv = inst.apply(d, p);
  return iv == kAll || iv == q;
}

}  // namespace

Residual make_residual(const Instance& inst) {
  Residual r;
  std::vector<char> keep(static_cast<size_t>(inst.n()), 1);
  Residual src;
  // Bootstrap: wrap the input with an identity mapping, then compact (no-op).
  src.orig.resize(static_cast<size_t>(inst.n()));
  for (Vertex v = 0; v < inst.n(); v++) src.orig[static_cast<size_t>(v)] = v;
  src.inst = inst;
  return restrict_residual(src, keep, {});
}

Residual residual_delete(const Residual& r, Vertex u) {
  std::vector<char> keep(static_cast<size_t>(r.inst.n()), 1);
  keep[static_cast<size_t>(u)] = 0;
  return restrict_residual(r, keep, {});
}

Residual residual_fix(const Residual& r, const Oracle& o, Vertex u,
                      std::vector<Vertex>& out_conflicted) {
  const Instance& inst = r.inst;
  if (!inst.in_A(u)) throw InputError("fixing an unassigned vertex");
  Value pu = inst.phi(u);
  if (pu == kUnknownPhi) throw InputError("fixing a vertex without a concrete value");
  OState tok_u = o.init(inst, u);
  std::vector<char> keep(static_cast<size_t>(inst.n()), 1);
  keep[static_cast<size_t>(u)] = 0;
  std::vector<NewAssign> assigns;
  for (DirEdge d : inst.adjacent(u)) {
    Vertex v = inst.head(d);
    if (inst.in_A(v)) {
      if (!edge_satisfied(inst, d, pu, inst.phi(v))) {
        keep[static_cast<size_t>(v)] = 0;
        out_conflicted.push_back(r.orig[static_cast<size_t>(v)]);
      }
      continue;
    }
    Value iv = inst.apply(d, pu);
    if (iv == kAll) continue;
    NewAssign na{v, iv, true, o.append(inst, tok_u, d)};
    assigns.push_back(na);
  }
  return restrict_residual(r, keep, assigns);
}

Residual residual_assign(const Residual& r, Vertex u, Value a) {
  std::vector<char> keep(static_cast<size_t>(r.inst.n()), 1);
  return restrict_residual(r, keep, {NewAssign{u, a, false, 0}});
}

std::vector<BranchOption> branching_set(const Instance& inst, Strategy s) {
  if (inst.n() == 0) throw InternalError("branching on an empty instance");
  Vertex u = 0;
  if (s == Strategy::TwoFan || s == Strategy::Auto) {
    for (int e = 0; e < inst.m(); e++) {
      const Edge& ed = inst.edge(e);
      if (ed.c.kind == CKind::Fan)
        return {{ed.u, ed.c.a}, {ed.v, ed.c.b}};
    }
    if (s == Strategy::TwoFan) s = Strategy::Generic;
  }
  if (s == Strategy::Group || (s == Strategy::Auto && inst.domain(u) == kGroupDomain)) {
    if (!inst.group()) throw InputError("identity branching needs a group");
    return {{u, inst.group()->identity()}};
  }
  int d = inst.domain(u);
  if (d == kGroupDomain) throw InputError("cannot enumerate a group domain");
  std::vector<BranchOption> out;
  for (Value a = 0; a < d; a++) out.push_back({u, a});
  return out;
}

UnitProp::UnitProp(const Instance& inst, const Oracle& o, Vertex src) : inst_(&inst), o_(&o) {
  seen_.assign(static_cast<size_t>(inst.n()), 0);
  tail_.assign(static_cast<size_t>(inst.n()), 0);
  via_.assign(static_cast<size_t>(inst.n()), kNoEdge);
  seen_[static_cast<size_t>(src)] = 1;
  tail_[static_cast<size_t>(src)] = o.init(inst, src);
  queue_.push_back(src);
}

UnitProp::Status UnitProp::step() {
  if (status_ != Running) return status_;
  steps_++;
  if (qhead_ == queue_.size()) {
    status_ = Clean;
    return status_;
  }
  Vertex u = queue_[qhead_];
  const auto& adj = inst_->adjacent(u);
  if (ei_ == adj.size()) {
    qhead_++;
    ei_ = 0;
    if (qhead_ == queue_.size()) status_ = Clean;
    return status_;
  }
  DirEdge d = adj[ei_++];
  Vertex v = inst_->head(d);
  OState st = o_->append(*inst_, tail_[static_cast<size_t>(u)], d);
  if (st == kAllState) return status_;
  if (seen_[static_cast<size_t>(v)]) {
    if (via_[static_cast<size_t>(v)] == d) return status_;
    if (via_[static_cast<size_t>(u)] == reverse_dir(d)) return status_;
    if (o_->test(st, tail_[static_cast<size_t>(v)])) status_ = Conflict;
    return status_;
  }
  seen_[static_cast<size_t>(v)] = 1;
  tail_[static_cast<size_t>(v)] = st;
  via_[static_cast<size_t>(v)] = d;
  queue_.push_back(v);
  return status_;
}

namespace {

class Solver {
public:
  Solver(const Oracle& o, Strategy strat) : o_(&o), strat_(strat) {}

  std::optional<std::vector<Vertex>> rec(Residual I, int k2, int delta_parent) {
    if (k2 < 0) return std::nullopt;
    FarthestResult fx = farthest_cover(I.inst, *o_, k2);
    if (!fx.within_cap) return std::nullopt;
    int c2 = 0;
    for (int w : fx.x2) c2 += w;
    int delta = k2 - c2;
    if (delta < 0) return std::nullopt;
    if (delta_parent >= 0 && delta >= delta_parent)
      throw InternalError("branching did not shrink the budget slack");
    // Expanded nodes only: calls pruned by the budget are probes charged to
    // their parent, not nodes of the recursion tree.
    stats.nodes++;

    // Persistency reduction: charge the integral part, then fix away the
    // zero-cost-reachable region.
    std::vector<Vertex> charged;
    std::vector<int> x2 = std::move(fx.x2);
    while (true) {
      Vertex one = -1;
      for (Vertex v = 0; v < I.inst.n(); v++)
        if (x2[static_cast<size_t>(v)] == 2) {
          one = v;
          break;
        }
      if (one < 0) break;
      charged.push_back(I.orig[static_cast<size_t>(one)]);
      k2 -= 2;
      std::vector<char> keep(static_cast<size_t>(I.inst.n()), 1);
      keep[static_cast<size_t>(one)] = 0;
      std::vector<Vertex> map;
      Residual next = restrict_residual(I, keep, {}, &map);
      std::vector<int> nx(static_cast<size_t>(next.inst.n()));
      for (Vertex v = 0; v < I.inst.n(); v++)
        if (map[static_cast<size_t>(v)] >= 0)
          nx[static_cast<size_t>(map[static_cast<size_t>(v)])] = x2[static_cast<size_t>(v)];
      I = std::move(next);
      x2 = std::move(nx);
    }
    // Fix away the zero-cost-reachable region in one pass: propagate values
    // from the zero-weight assigned vertices; zero-weight reached vertices are
    // removed, positive-weight ones are promoted into the assigned set. A
    // value clash would contradict farthestness of the cover.
    {
      const Instance& inst = I.inst;
      int n = inst.n();
      std::vector<char> fixed(static_cast<size_t>(n), 0), valued(static_cast<size_t>(n), 0);
      std::vector<Value> val(static_cast<size_t>(n), 0);
      std::vector<OState> tok(static_cast<size_t>(n), 0);
      std::vector<Vertex> bfs;
      for (Vertex a : inst.a_vertices())
        if (x2[static_cast<size_t>(a)] == 0) {
          fixed[static_cast<size_t>(a)] = 1;
          valued[static_cast<size_t>(a)] = 1;
          val[static_cast<size_t>(a)] = inst.phi(a);
          tok[static_cast<size_t>(a)] = o_->init(inst, a);
          bfs.push_back(a);
        }
      for (size_t h = 0; h < bfs.size(); h++) {
        Vertex u = bfs[h];
        for (DirEdge d : inst.adjacent(u)) {
          Vertex v = inst.head(d);
          Value iv = inst.apply(d, val[static_cast<size_t>(u)]);
          if (iv == kAll) continue;
          Value have = valued[static_cast<size_t>(v)] ? val[static_cast<size_t>(v)]
                       : inst.in_A(v)                 ? inst.phi(v)
                                                      : kUnknownPhi;
          if (have != kUnknownPhi) {
            if (have != iv)
              throw InternalError("persistency reduction hit a contradicted neighbor");
            continue;
          }
          valued[static_cast<size_t>(v)] = 1;
          val[static_cast<size_t>(v)] = iv;
          tok[static_cast<size_t>(v)] = o_->append(inst, tok[static_cast<size_t>(u)], d);
          if (x2[static_cast<size_t>(v)] == 0) {
            fixed[static_cast<size_t>(v)] = 1;
            bfs.push_back(v);
          }
        }
      }
      if (!bfs.empty()) {
        std::vector<char> keep(static_cast<size_t>(n), 1);
        std::vector<NewAssign> assigns;
        for (Vertex v = 0; v < n; v++) {
          if (fixed[static_cast<size_t>(v)])
            keep[static_cast<size_t>(v)] = 0;
          else if (valued[static_cast<size_t>(v)] && !inst.in_A(v))
            assigns.push_back(NewAssign{v, val[static_cast<size_t>(v)], true,
                                        tok[static_cast<size_t>(v)]});
        }
        I = restrict_residual(I, keep, assigns);
      }
    }

    auto done = [&](std::vector<Vertex> tail) {
      tail.insert(tail.end(), charged.begin(), charged.end());
      return std::optional<std::vector<Vertex>>(std::move(tail));
    };

    // Assigned vertices remain: branch on deleting or keeping one of them.
    if (!I.inst.a_vertices().empty()) {
      Vertex u = *std::min_element(I.inst.a_vertices().begin(), I.inst.a_vertices().end());
      Vertex u_orig = I.orig[static_cast<size_t>(u)];
      if (auto w = rec(residual_delete(I, u), k2 - 2, delta)) {
        w->push_back(u_orig);
        return done(std::move(*w));
      }
      std::vector<Vertex> conflicted;
      Residual fixed = residual_fix(I, *o_, u, conflicted);
      int ck2 = k2 - 2 * static_cast<int>(conflicted.size());
      if (ck2 >= 0) {
        if (auto w = rec(std::move(fixed), ck2, delta)) {
          w->insert(w->end(), conflicted.begin(), conflicted.end());
          return done(std::move(*w));
        }
      }
      return std::nullopt;
    }

    // No assignments left: peel satisfiable implied components, then branch
    // over a branching set.
    while (true) {
      if (I.inst.n() == 0) return done({});
      std::vector<BranchOption> B = branching_set(I.inst, strat_);
      stats.max_branch = std::max(stats.max_branch, static_cast<int>(B.size()));
      std::vector<Residual> cands;
      std::vector<UnitProp> props;
      cands.reserve(B.size());
      for (const BranchOption& b : B) cands.push_back(residual_assign(I, b.v, b.a));
      for (size_t i = 0; i < B.size(); i++)
        props.emplace_back(cands[i].inst, *o_, B[i].v);
      stats.unit_rounds++;
      size_t winner = B.size();
      while (winner == B.size()) {
        bool running = false;
        for (size_t i = 0; i < props.size() && winner == B.size(); i++) {
          if (props[i].status() != UnitProp::Running) continue;
          running = true;
          if (props[i].step() == UnitProp::Clean) winner = i;
        }
        if (!running) break;
      }
      if (winner == B.size()) {
        // Every candidate conflicts; recurse (the budget slack shrinks
        // because each candidate has a non-empty conflict set).
        for (size_t i = 0; i < B.size(); i++)
          if (auto w = rec(std::move(cands[i]), k2, delta)) return done(std::move(*w));
        return std::nullopt;
      }
      // The winning candidate's implied component is satisfiable on its own
      // and detaches along two-fan constraints: drop it and continue.
      std::vector<char> keep(static_cast<size_t>(I.inst.n()), 1);
      for (Vertex v : props[winner].visited()) keep[static_cast<size_t>(v)] = 0;
      I = restrict_residual(I, keep, {});
    }
  }

  SolveStats stats;

private:
  const Oracle* o_;
  Strategy strat_;
};

}  // namespace

SolveResult solve_deletion(const Instance& inst, const Oracle& o, int k, Strategy strategy) {
  SolveResult out;
  Solver s(o, strategy);
  auto w = s.rec(make_residual(inst), 2 * k, -1);
  out.stats = s.stats;
  out.yes = w.has_value();
  if (out.yes) {
    std::sort(w->begin(), w->end());
    w->erase(std::unique(w->begin(), w->end()), w->end());
    out.witness = std::move(*w);
  }
  return out;
}

}  // namespace zoa
