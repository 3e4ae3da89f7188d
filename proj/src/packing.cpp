#include "zoa/packing.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zoa {

Walk Wheel::sector_walk(int i) const {
  int d = degree();
  const auto& s0 = spokes[static_cast<size_t>(i)];
  const auto& s1 = spokes[static_cast<size_t>((i + 1) % d)];
  return concat(concat(s0, arcs[static_cast<size_t>(i)]), reversed(s1));
}

Walk Wheel::cycle_walk() const {
  Walk w = arcs[0];
  for (int i = 1; i < degree(); i++) w = concat(w, arcs[static_cast<size_t>(i)]);
  return w;
}

void BasicPacking::set_member(Vertex v, Member m) {
  if (static_cast<size_t>(v) >= member_.size()) member_.resize(static_cast<size_t>(v) + 1);
  Member& slot = member_[static_cast<size_t>(v)];
  if (slot.role != Member::Free) throw InternalError("packing structures must be vertex-disjoint");
  slot = m;
}

void BasicPacking::clear_member(Vertex v) { member_[static_cast<size_t>(v)] = Member{}; }

void BasicPacking::add_edge_w(Vertex u, Vertex v, int w2) {
  int& slot = edge_w2_[ekey(u, v)];
  slot += w2;
  if (slot == 0) edge_w2_.erase(ekey(u, v));
}

void BasicPacking::insert_members(int sid, int delta) {
  const Structure& s = structs_[static_cast<size_t>(sid)];
  auto touch = [&](Vertex v, Member m) {
    if (delta > 0) set_member(v, m);
    else clear_member(v);
  };
  if (!s.is_wheel) {
    for (size_t i = 0; i < s.path.size(); i++)
      touch(s.path[i], Member{sid, Member::PathVert, 0, static_cast<int>(i)});
    for (size_t i = 0; i + 1 < s.path.size(); i++)
      add_edge_w(s.path[i], s.path[i + 1], 2 * delta);
    return;
  }
  const Wheel& w = s.wheel;
  for (int i = 0; i < w.degree(); i++) {
    const auto& sp = w.spokes[static_cast<size_t>(i)];
    for (size_t j = 0; j < sp.size(); j++)
      touch(sp[j], Member{sid, Member::SpokeVert, i, static_cast<int>(j)});
    for (size_t j = 0; j + 1 < sp.size(); j++) add_edge_w(sp[j], sp[j + 1], 2 * delta);
    const auto& arc = w.arcs[static_cast<size_t>(i)];
    // arc.front() is hub i (a spoke vertex); arc.back() is hub i+1.
    for (size_t j = 1; j + 1 < arc.size(); j++)
      touch(arc[j], Member{sid, Member::CycleVert, i, static_cast<int>(j)});
    for (size_t j = 0; j + 1 < arc.size(); j++) add_edge_w(arc[j], arc[j + 1], delta);
  }
}

int BasicPacking::add_path(std::vector<Vertex> vs) {
  if (vs.size() < 2) throw InternalError("integral path needs at least one edge");
  int sid = static_cast<int>(structs_.size());
  Structure s;
  s.alive = true;
  s.is_wheel = false;
  s.path = std::move(vs);
  structs_.push_back(std::move(s));
  insert_members(sid, +1);
  size2_ += 2;
  return sid;
}

int BasicPacking::add_wheel(Wheel w) {
  int d = w.degree();
  if (d < 1 || d % 2 == 0) throw InternalError("wheel degree must be odd");
  if (static_cast<int>(w.spokes.size()) != d) throw InternalError("wheel needs one spoke per hub");
  for (int i = 0; i < d; i++) {
    if (w.arcs[static_cast<size_t>(i)].size() < 2) throw InternalError("wheel arc needs at least one edge");
    if (w.spokes[static_cast<size_t>(i)].empty()) throw InternalError("empty spoke");
    if (w.spokes[static_cast<size_t>(i)].back() != w.hub(i)) throw InternalError("spoke must end at its hub");
    if (w.arcs[static_cast<size_t>(i)].back() != w.hub((i + 1) % d)) throw InternalError("arcs must chain between hubs");
  }
  int sid = static_cast<int>(structs_.size());
  Structure s;
  s.alive = true;
  s.is_wheel = true;
  s.wheel = std::move(w);
  structs_.push_back(std::move(s));
  insert_members(sid, +1);
  size2_ += d;  // d sector walks at weight 1/2 each
  return sid;
}

void BasicPacking::remove(int sid) {
  Structure& s = structs_[static_cast<size_t>(sid)];
  if (!s.alive) throw InternalError("removing a dead structure");
  insert_members(sid, -1);
  size2_ -= s.is_wheel ? s.wheel.degree() : 2;
  s.alive = false;
}

std::vector<int> BasicPacking::alive_ids() const {
  std::vector<int> out;
  for (int i = 0; i < num_slots(); i++)
    if (structs_[static_cast<size_t>(i)].alive) out.push_back(i);
  return out;
}

int BasicPacking::edge_weight2(Vertex u, Vertex v) const {
  auto it = edge_w2_.find(ekey(u, v));
  return it == edge_w2_.end() ? 0 : it->second;
}

int BasicPacking::vertex_weight2(Vertex v) const {
  switch (member(v).role) {
    case Member::Free: return 0;
    case Member::CycleVert: return 1;
    default: return 2;
  }
}

std::vector<Walk> BasicPacking::decompose_wheel(int sid, int skip) const {
  const Structure& s = structs_[static_cast<size_t>(sid)];
  if (!s.is_wheel) throw InternalError("decompose_wheel on an integral path");
  const Wheel& w = s.wheel;
  int d = w.degree();
  std::vector<Walk> out;
  for (int j = 1; j + 1 < d; j += 2) out.push_back(w.sector_walk((skip + j) % d));
  return out;
}

Walk BasicPacking::spoke_backward(Vertex v) const {
  const Member& m = member(v);
  if (m.role != Member::SpokeVert) throw InternalError("spoke navigation on a non-spoke vertex");
  const auto& sp = structs_[static_cast<size_t>(m.sid)].wheel.spokes[static_cast<size_t>(m.idx)];
  return Walk(sp.begin(), sp.begin() + m.pos + 1);
}

Walk BasicPacking::spoke_forward(Vertex v) const {
  const Member& m = member(v);
  if (m.role != Member::SpokeVert) throw InternalError("spoke navigation on a non-spoke vertex");
  const auto& sp = structs_[static_cast<size_t>(m.sid)].wheel.spokes[static_cast<size_t>(m.idx)];
  return Walk(sp.rbegin(), sp.rbegin() + (static_cast<long>(sp.size()) - m.pos));
}

namespace {

bool fail(ValidationReport& r, const std::string& msg) {
  r.ok = false;
  r.violation = msg;
  return false;
}

bool check_simple_path(const Instance& inst, const Walk& w, ValidationReport& r, const char* what) {
  std::set<Vertex> seen;
  for (size_t i = 0; i < w.size(); i++) {
    if (!seen.insert(w[i]).second) return fail(r, std::string(what) + ": repeated vertex");
    if (i + 1 < w.size() && inst.find_edge(w[i], w[i + 1]) == kNoEdge)
      return fail(r, std::string(what) + ": missing edge");
  }
  return true;
}

bool check_conflicting(const Instance& inst, const Oracle& o, const Walk& w, ValidationReport& r, const char* what) {
  if (!inst.in_A(w.front()) || !inst.in_A(w.back()))
    return fail(r, std::string(what) + ": endpoints must carry assignments");
  for (size_t i = 1; i + 1 < w.size(); i++)
    if (inst.in_A(w[i])) return fail(r, std::string(what) + ": interior vertex carries an assignment");
  OState a = astar(inst, o, w);
  OState b = o.init(inst, w.back());
  if (a == kAllState || !o.test(a, b)) return fail(r, std::string(what) + ": walk is not conflicting");
  if (inst.tracks_ground_truth() && inst.phi(w.front()) != kUnknownPhi && inst.phi(w.back()) != kUnknownPhi) {
    if (!is_conflicting(inst, w)) return fail(r, std::string(what) + ": oracle and ground truth disagree");
  }
  return true;
}

}  // namespace

ValidationReport validate_packing(const Instance& inst, const Oracle& o, const BasicPacking& y) {
  ValidationReport r;
  std::set<Vertex> used;
  for (int sid : y.alive_ids()) {
    const Structure& s = y.at(sid);
    std::vector<Vertex> verts;
    if (!s.is_wheel) {
      if (!check_simple_path(inst, s.path, r, "integral path")) return r;
      if (!check_conflicting(inst, o, s.path, r, "integral path")) return r;
      verts = s.path;
    } else {
      const Wheel& w = s.wheel;
      int d = w.degree();
      if (d % 2 == 0) return (fail(r, "wheel: even degree"), r);
      Walk cyc = w.cycle_walk();
      if (cyc.front() != cyc.back()) return (fail(r, "wheel: cycle is not closed"), r);
      Walk cyc_open(cyc.begin(), cyc.end() - 1);
      if (!check_simple_path(inst, cyc_open, r, "wheel cycle")) return r;
      if (inst.find_edge(cyc[cyc.size() - 2], cyc.back()) == kNoEdge)
        return (fail(r, "wheel cycle: missing closing edge"), r);
      std::set<Vertex> cyc_set(cyc_open.begin(), cyc_open.end());
      for (int i = 0; i < d; i++) {
        const auto& sp = w.spokes[static_cast<size_t>(i)];
        if (!check_simple_path(inst, sp, r, "spoke")) return r;
        if (!inst.in_A(sp.front())) return (fail(r, "spoke: source must carry an assignment"), r);
        for (size_t j = 0; j + 1 < sp.size(); j++)
          if (cyc_set.count(sp[j])) return (fail(r, "spoke: meets the cycle before its hub"), r);
        for (int i2 = 0; i2 < i; i2++) {
          const auto& sp2 = w.spokes[static_cast<size_t>(i2)];
          std::set<Vertex> s2(sp2.begin(), sp2.end());
          for (Vertex v : sp)
            if (s2.count(v)) return (fail(r, "spokes: not pairwise disjoint"), r);
        }
        if (!check_conflicting(inst, o, w.sector_walk(i), r, "wheel sector")) return r;
      }
      verts.assign(cyc_set.begin(), cyc_set.end());
      for (const auto& sp : w.spokes)
        for (size_t j = 0; j + 1 < sp.size(); j++) verts.push_back(sp[j]);
    }
    for (Vertex v : verts)
      if (!used.insert(v).second) return (fail(r, "structures are not vertex-disjoint"), r);
  }
  return r;
}

std::string dump_packing(const BasicPacking& y) {
  std::ostringstream os;
  for (int sid : y.alive_ids()) {
    const Structure& s = y.at(sid);
    if (!s.is_wheel) {
      os << "path";
      for (Vertex v : s.path) os << ' ' << v;
      os << '\n';
    } else {
      os << "wheel " << s.wheel.degree() << '\n';
      os << "cycle";
      for (Vertex v : s.wheel.cycle_walk()) os << ' ' << v;
      os << '\n';
      for (int i = 0; i < s.wheel.degree(); i++) {
        os << "spoke " << i << ':';
        for (Vertex v : s.wheel.spokes[static_cast<size_t>(i)]) os << ' ' << v;
        os << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace zoa
