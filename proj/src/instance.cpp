#include "zoa/instance.hpp"

#include <algorithm>

namespace zoa {

void Instance::resize(int n) {
  dom_.assign(static_cast<size_t>(n), 0);
  vlabel_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) vlabel_[static_cast<size_t>(i)] = i;
  phi_.assign(static_cast<size_t>(n), kUnknownPhi);
  in_a_.assign(static_cast<size_t>(n), 0);
  has_token_.assign(static_cast<size_t>(n), 0);
  token_.assign(static_cast<size_t>(n), 0);
  adj_.assign(static_cast<size_t>(n), {});
  base_n_ = n;
}

int Instance::add_vertex(int domain_size, int64_t label) {
  int v = n();
  dom_.push_back(domain_size);
  vlabel_.push_back(label);
  phi_.push_back(kUnknownPhi);
  in_a_.push_back(0);
  has_token_.push_back(0);
  token_.push_back(0);
  adj_.emplace_back();
  base_n_ = n();
  return v;
}

int Instance::add_edge(Vertex u, Vertex v, Constraint c) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop constraint; normalize input first");
  int64_t key = pair_key(u, v);
  if (edge_index_.count(key)) throw InputError("duplicate constraint on a vertex pair");
  int e = m();
  edge_index_.emplace(key, e);
  edges_.push_back(Edge{u, v, std::move(c), -1, -1, false});
  adj_[static_cast<size_t>(u)].push_back(forward_dir(e));
  adj_[static_cast<size_t>(v)].push_back(reverse_dir(forward_dir(e)));
  return e;
}

int Instance::add_perm(Vertex u, Vertex v, std::vector<Value> table) {
  int du = domain(u), dv = domain(v);
  if (du != dv || du <= 0) throw InputError("permutation requires equal positive table domains");
  if (static_cast<int>(table.size()) != du) throw InputError("permutation table size mismatch");
  std::vector<Value> inv(static_cast<size_t>(dv), -1);
  for (int p = 0; p < du; p++) {
    Value q = table[static_cast<size_t>(p)];
    if (q < 0 || q >= dv || inv[static_cast<size_t>(q)] != -1) throw InputError("permutation table is not a bijection");
    inv[static_cast<size_t>(q)] = p;
  }
  Constraint c;
  c.kind = CKind::Perm;
  c.fwd = std::move(table);
  c.inv = std::move(inv);
  return add_edge(u, v, std::move(c));
}

int Instance::add_identity(Vertex u, Vertex v) {
  if (domain(u) == kGroupDomain) {
    if (!group_) throw InputError("group-domain identity edge without a group");
    Constraint c;
    c.kind = CKind::GroupLabel;
    c.lab = group_->identity();
    c.lab_inv = group_->identity();
    return add_edge(u, v, std::move(c));
  }
  std::vector<Value> t(static_cast<size_t>(domain(u)));
  for (size_t i = 0; i < t.size(); i++) t[i] = static_cast<Value>(i);
  return add_perm(u, v, std::move(t));
}

int Instance::add_fan(Vertex u, Vertex v, Value a, Value b) {
  if (a < 0 || (domain(u) != kGroupDomain && a >= domain(u))) throw InputError("two-fan pin out of domain");
  if (b < 0 || (domain(v) != kGroupDomain && b >= domain(v))) throw InputError("two-fan pin out of domain");
  Constraint c;
  c.kind = CKind::Fan;
  c.a = a;
  c.b = b;
  return add_edge(u, v, std::move(c));
}

int Instance::add_group_edge(Vertex u, Vertex v, int64_t lab) {
  if (!group_) throw InputError("group edge on an instance without a group");
  Constraint c;
  c.kind = CKind::GroupLabel;
  c.lab = lab;
  c.lab_inv = group_->inverse(lab);
  return add_edge(u, v, std::move(c));
}

void Instance::set_phi(Vertex v, Value phi) {
  size_t i = static_cast<size_t>(v);
  if (in_a_[i]) throw InputError("duplicate assignment for a vertex");
  if (phi != kUnknownPhi && domain(v) != kGroupDomain && (phi < 0 || phi >= domain(v)))
    throw InputError("assignment value out of domain");
  in_a_[i] = 1;
  phi_[i] = phi;
  a_list_.push_back(v);
}

void Instance::set_init_token(Vertex v, int64_t token) {
  has_token_[static_cast<size_t>(v)] = 1;
  token_[static_cast<size_t>(v)] = token;
}

DirEdge Instance::find_edge(Vertex u, Vertex v) const {
  auto it = edge_index_.find(pair_key(u, v));
  if (it == edge_index_.end()) return kNoEdge;
  DirEdge d = forward_dir(it->second);
  return tail(d) == u ? d : reverse_dir(d);
}

Value Instance::apply(DirEdge d, Value p) const {
  const Edge& e = edges_[static_cast<size_t>(edge_id(d))];
  bool r = is_reversed(d);
  switch (e.c.kind) {
    case CKind::Perm: {
      const auto& t = r ? e.c.inv : e.c.fwd;
      if (p < 0 || p >= static_cast<Value>(t.size())) throw InputError("value out of domain in apply");
      return t[static_cast<size_t>(p)];
    }
    case CKind::Fan: {
      Value pin_tail = r ? e.c.b : e.c.a;
      Value pin_head = r ? e.c.a : e.c.b;
      return p == pin_tail ? kAll : pin_head;
    }
    case CKind::GroupLabel:
      return group_->op(p, r ? e.c.lab_inv : e.c.lab);
    case CKind::Transparent:
      return p;
  }
  throw InternalError("bad constraint kind");
}

Vertex Instance::add_contraction(Vertex t, Value phi_value, int64_t init_token) {
  Vertex tp = static_cast<Vertex>(n());
  dom_.push_back(domain(t));
  vlabel_.push_back(-1);
  phi_.push_back(kUnknownPhi);
  in_a_.push_back(0);
  has_token_.push_back(0);
  token_.push_back(0);
  adj_.emplace_back();
  Constraint c;
  c.kind = CKind::Transparent;
  add_edge(tp, t, std::move(c));
  set_phi(tp, phi_value);
  set_init_token(tp, init_token);
  return tp;
}

void Instance::pop_contraction() {
  if (n() <= base_n_) throw InternalError("pop_contraction without contraction");
  Vertex tp = static_cast<Vertex>(n() - 1);
  const Edge& e = edges_.back();
  if (e.u != tp) throw InternalError("arena corruption");
  edge_index_.erase(pair_key(e.u, e.v));
  adj_[static_cast<size_t>(e.v)].pop_back();
  edges_.pop_back();
  if (a_list_.empty() || a_list_.back() != tp) throw InternalError("arena corruption");
  a_list_.pop_back();
  dom_.pop_back();
  vlabel_.pop_back();
  phi_.pop_back();
  in_a_.pop_back();
  has_token_.pop_back();
  token_.pop_back();
  adj_.pop_back();
}

Value propagate_walk(const Instance& inst, std::span<const Vertex> w, Value p) {
  if (w.empty()) throw InputError("empty walk");
  Value cur = p;
  for (size_t i = 0; i + 1 < w.size(); i++) {
    if (cur == kAll) return kAll;
    DirEdge d = inst.find_edge(w[i], w[i + 1]);
    if (d == kNoEdge) throw InputError("walk step is not an edge");
    cur = inst.apply(d, cur);
  }
  return cur;
}

Value imp_walk(const Instance& inst, std::span<const Vertex> w) {
  if (w.empty()) throw InputError("empty walk");
  Vertex s = w.front();
  if (!inst.in_A(s)) return kNotImp;
  Value p = inst.phi(s);
  if (p == kUnknownPhi) throw InternalError("imp_walk on untracked assignment");
  Value r = propagate_walk(inst, w, p);
  return r == kAll ? kNotImp : r;
}

bool is_implicational(const Instance& inst, std::span<const Vertex> w) {
  return imp_walk(inst, w) != kNotImp;
}

bool is_conflicting(const Instance& inst, std::span<const Vertex> w) {
  Value r = imp_walk(inst, w);
  if (r == kNotImp) return false;
  Vertex t = w.back();
  if (!inst.in_A(t)) return false;
  Value pt = inst.phi(t);
  if (pt == kUnknownPhi) throw InternalError("is_conflicting on untracked assignment");
  return r != pt;
}

bool equivalent(const Instance& inst, std::span<const Vertex> p, std::span<const Vertex> q) {
  Value ip = imp_walk(inst, p);
  Value iq = imp_walk(inst, q);
  if (ip == kNotImp || iq == kNotImp) throw InputError("equivalent() requires implicational walks");
  if (p.back() != q.back()) throw InputError("equivalent() requires a common endpoint");
  return ip == iq;
}

Walk reversed(const Walk& w) { return Walk(w.rbegin(), w.rend()); }

Walk concat(const Walk& a, const Walk& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) throw InternalError("concat endpoint mismatch");
  Walk out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

}  // namespace zoa
