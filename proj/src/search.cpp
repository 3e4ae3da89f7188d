#include "zoa/search.hpp"

#include <algorithm>

namespace zoa {

namespace {

std::vector<OState> prefix_states(const Instance& inst, const Oracle& o, const std::vector<Vertex>& line) {
  std::vector<OState> out;
  out.reserve(line.size());
  OState st = o.init(inst, line.front());
  out.push_back(st);
  for (size_t i = 0; i + 1 < line.size(); i++) {
    DirEdge d = inst.find_edge(line[i], line[i + 1]);
    if (d == kNoEdge) throw InternalError("packed structure uses a missing edge");
    st = o.append(inst, st, d);
    if (st == kAllState) throw InternalError("packed structure prefix does not propagate");
    out.push_back(st);
  }
  return out;
}

}  // namespace

const std::vector<Vertex>& SearchEngine::struct_line(const Member& m) const {
  const Structure& s = y_->at(m.sid);
  if (m.role == Member::PathVert) return s.path;
  return s.wheel.spokes[static_cast<size_t>(m.idx)];
}

void SearchEngine::refresh_structure(int sid) {
  size_t slots = static_cast<size_t>(y_->num_slots());
  if (fwd_.size() < slots) {
    fwd_.resize(slots);
    bwd_.resize(slots);
    spfx_.resize(slots);
    a_path_.resize(slots, 0);
    b_path_.resize(slots, 0);
    a_spoke_.resize(slots);
  }
  const Structure& s = y_->at(sid);
  size_t si = static_cast<size_t>(sid);
  fwd_[si].clear();
  bwd_[si].clear();
  spfx_[si].clear();
  if (!s.alive) return;
  if (!s.is_wheel) {
    fwd_[si] = prefix_states(*inst_, *o_, s.path);
    std::vector<Vertex> rev(s.path.rbegin(), s.path.rend());
    std::vector<OState> b = prefix_states(*inst_, *o_, rev);
    bwd_[si].assign(b.rbegin(), b.rend());
  } else {
    for (const auto& sp : s.wheel.spokes) spfx_[si].push_back(prefix_states(*inst_, *o_, sp));
  }
}

void SearchEngine::reset_structure_tables(int sid) {
  const Structure& s = y_->at(sid);
  size_t si = static_cast<size_t>(sid);
  if (!s.is_wheel) {
    a_path_[si] = 0;
    b_path_[si] = static_cast<int>(s.path.size()) - 1;
  } else {
    a_spoke_[si].assign(s.wheel.spokes.size(), 0);
  }
}

void SearchEngine::prepare() {
  vis_.assign(static_cast<size_t>(inst_->n()), VisitInfo{});
  queue_.clear();
  qhead_ = 0;
  size_t slots = static_cast<size_t>(y_->num_slots());
  fwd_.assign(slots, {});
  bwd_.assign(slots, {});
  spfx_.assign(slots, {});
  a_path_.assign(slots, 0);
  b_path_.assign(slots, 0);
  a_spoke_.assign(slots, {});
  for (int sid : y_->alive_ids()) {
    refresh_structure(sid);
    reset_structure_tables(sid);
  }
}

void SearchEngine::push(Vertex v, DirEdge via, Vertex branch, OState tail) {
  if (static_cast<size_t>(v) >= vis_.size()) vis_.resize(static_cast<size_t>(v) + 1);
  VisitInfo& vi = vis_[static_cast<size_t>(v)];
  if (vi.seen) throw InternalError("vertex pushed twice");
  vi.seen = 1;
  vi.via = via;
  vi.branch = branch;
  vi.tail = tail;
  queue_.push_back(v);
}

Walk SearchEngine::reconstruct(Vertex v) const {
  std::vector<Vertex> rev;
  Vertex cur = v;
  while (true) {
    const VisitInfo& vi = vis_[static_cast<size_t>(cur)];
    if (vi.branch != cur) {
      const Member& m = y_->member(cur);
      const Member& mb = y_->member(vi.branch);
      const std::vector<Vertex>& line = struct_line(m);
      int step = m.pos < mb.pos ? 1 : -1;
      for (int j = m.pos; j != mb.pos + step; j += step) rev.push_back(line[static_cast<size_t>(j)]);
    } else {
      rev.push_back(cur);
    }
    if (vi.via == kNoEdge) break;
    cur = inst_->tail(vi.via);
  }
  return Walk(rev.rbegin(), rev.rend());
}

SearchResult SearchEngine::run() {
  SearchResult r;
  for (Vertex s : inst_->a_vertices()) {
    if (y_->in_y(s)) continue;
    if (visited(s)) continue;  // already a source in an earlier round
    r = run_from(s);
    if (r.kind != SearchResult::None) return r;
  }
  return r;
}

SearchResult SearchEngine::run_from(Vertex s) {
  if (static_cast<size_t>(inst_->n()) > vis_.size()) vis_.resize(static_cast<size_t>(inst_->n()));
  queue_.clear();
  qhead_ = 0;
  push(s, kNoEdge, s, o_->init(*inst_, s));
  return main_loop();
}

SearchResult SearchEngine::main_loop() {
  SearchResult r;
  while (qhead_ < queue_.size()) {
    Vertex u = queue_[qhead_++];
    const VisitInfo vu = vis_[static_cast<size_t>(u)];
    for (DirEdge d : inst_->adjacent(u)) {
      Vertex v = inst_->head(d);
      if (y_->edge_in_y(u, v)) continue;
      OState st = o_->append(*inst_, vu.tail, d);
      if (st == kAllState) continue;  // extension does not propagate
      if (visited(v)) {
        const VisitInfo& vv = vis_[static_cast<size_t>(v)];
        if (vv.via == d) continue;                                    // P(v) = P(u).e
        if (vu.branch == u && vu.via == reverse_dir(d)) continue;     // P(u) = P(v).e^-1
        if (o_->test(st, vv.tail)) {
          r.kind = SearchResult::Pair;
          r.path = reconstruct(u);
          r.path.push_back(v);
          r.path2 = reconstruct(v);
          return r;
        }
        continue;
      }
      const Member& m = y_->member(v);
      if (m.role == Member::PathVert) {
        size_t si = static_cast<size_t>(m.sid);
        const std::vector<Vertex>& line = y_->at(m.sid).path;
        int i = m.pos;
        if (o_->test(st, bwd_[si][static_cast<size_t>(i)])) {
          for (int j = a_path_[si]; j < i; j++)
            push(line[static_cast<size_t>(j)], d, v, fwd_[si][static_cast<size_t>(j)]);
          a_path_[si] = i;
        }
        if (o_->test(st, fwd_[si][static_cast<size_t>(i)])) {
          for (int j = i + 1; j <= b_path_[si]; j++)
            push(line[static_cast<size_t>(j)], d, v, bwd_[si][static_cast<size_t>(j)]);
          b_path_[si] = i;
        }
      } else if (m.role == Member::SpokeVert) {
        size_t si = static_cast<size_t>(m.sid);
        size_t sj = static_cast<size_t>(m.idx);
        const std::vector<Vertex>& line = y_->at(m.sid).wheel.spokes[sj];
        int i = m.pos;
        if (o_->test(st, spfx_[si][sj][static_cast<size_t>(i)])) {
          r.kind = SearchResult::Path;
          r.path = reconstruct(u);
          r.path.push_back(v);
          return r;
        }
        for (int j = a_spoke_[si][sj]; j < i; j++)
          push(line[static_cast<size_t>(j)], d, v, spfx_[si][sj][static_cast<size_t>(j)]);
        a_spoke_[si][sj] = i;
      } else if (m.role == Member::CycleVert) {
        r.kind = SearchResult::Path;
        r.path = reconstruct(u);
        r.path.push_back(v);
        return r;
      } else if (inst_->in_A(v)) {
        if (o_->test(st, o_->init(*inst_, v))) {
          r.kind = SearchResult::Path;
          r.path = reconstruct(u);
          r.path.push_back(v);
          return r;
        }
      } else {
        push(v, d, v, st);
      }
    }
  }
  return r;
}

std::vector<Vertex> SearchEngine::visited_vertices() const {
  std::vector<Vertex> out;
  for (size_t v = 0; v < vis_.size(); v++)
    if (vis_[v].seen) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<std::pair<Vertex, int>> SearchEngine::extract_cover2() const {
  std::vector<std::pair<Vertex, int>> out;
  for (int sid : y_->alive_ids()) {
    const Structure& s = y_->at(sid);
    size_t si = static_cast<size_t>(sid);
    if (!s.is_wheel) {
      int a = a_path_[si], b = b_path_[si];
      if (a == b) {
        out.emplace_back(s.path[static_cast<size_t>(a)], 2);
      } else {
        out.emplace_back(s.path[static_cast<size_t>(a)], 1);
        out.emplace_back(s.path[static_cast<size_t>(b)], 1);
      }
    } else {
      for (size_t j = 0; j < s.wheel.spokes.size(); j++)
        out.emplace_back(s.wheel.spokes[j][static_cast<size_t>(a_spoke_[si][j])], 1);
    }
  }
  return out;
}

}  // namespace zoa
