#include "zoa/oracle.hpp"

namespace zoa {

OState astar(const Instance& inst, const Oracle& o, std::span<const Vertex> w) {
  if (w.empty()) throw InputError("empty walk");
  if (!inst.in_A(w.front())) return kAllState;
  OState st = o.init(inst, w.front());
  for (size_t i = 0; i + 1 < w.size(); i++) {
    if (st == kAllState) return kAllState;
    DirEdge d = inst.find_edge(w[i], w[i + 1]);
    if (d == kNoEdge) throw InputError("walk step is not an edge");
    st = o.append(inst, st, d);
  }
  return st;
}

OState NaiveOracle::do_init(const Instance& inst, Vertex s) const {
  if (inst.has_init_token(s)) return inst.init_token(s);
  Value p = inst.phi(s);
  if (p == kUnknownPhi) throw InternalError("naive oracle needs tracked assignments");
  return p;
}

OState NaiveOracle::do_append(const Instance& inst, OState st, DirEdge d) const {
  Value r = inst.apply(d, st);
  return r == kAll ? kAllState : r;
}

OState SubsetFvsOracle::do_init(const Instance& inst, Vertex s) const {
  if (inst.has_init_token(s)) return inst.init_token(s);
  return 0;  // epsilon
}

OState SubsetFvsOracle::do_append(const Instance& inst, OState st, DirEdge d) const {
  const Edge& e = inst.edge(edge_id(d));
  if (e.c.kind == CKind::Transparent) return st;
  return e.in_s ? e.label + 1 : st;
}

OState NonMonoOracle::do_init(const Instance& inst, Vertex s) const {
  if (inst.has_init_token(s)) return inst.init_token(s);
  return kEps;
}

OState NonMonoOracle::do_append(const Instance& inst, OState st, DirEdge d) const {
  const Edge& e = inst.edge(edge_id(d));
  if (e.c.kind == CKind::Transparent) return st;
  int64_t c = e.color;
  int64_t tail_label = inst.label(inst.tail(d));
  int64_t head_label = inst.label(inst.head(d));
  if (st == kEps) return enc(tail_label, c);
  // After a closed monochromatic cycle the suffix's start is the current
  // tail: the cycle closed there, so the longest single-color suffix of the
  // extended walk begins at the tail whatever the new edge's color is.
  if (st == kStar) return enc(tail_label, c);
  int64_t w = (st - 2) / colors_;
  int64_t wc = (st - 2) % colors_;
  if (wc == c) return w == head_label ? kStar : st;
  return enc(tail_label, c);
}

bool NonMonoOracle::do_test(OState a, OState b) const {
  return a != kStar && b != kStar && a != b;
}

}  // namespace zoa
