#include "zoa/augment.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace zoa {

namespace {

// ---------------------------------------------------------------------------
// Segment location. Structure data is looked up freshly on every use so that
// packing rewrites performed mid-operation are always reflected.

struct RawPos {
  int sid = -1;
  bool is_spoke = false;
  int idx = 0;     // spoke index
  int a = 0, b = 0;  // positions of seg.front()/seg.back() in stored order
};

RawPos raw_pos(const BasicPacking& y, const Walk& seg) {
  if (seg.size() < 2) throw InternalError("structure segment needs at least one edge");
  Member ma = y.member(seg.front());
  Member mb = y.member(seg.back());
  RawPos r;
  if (ma.role == Member::PathVert && mb.role == Member::PathVert && ma.sid == mb.sid) {
    r.sid = ma.sid;
    r.a = ma.pos;
    r.b = mb.pos;
    return r;
  }
  if (ma.role == Member::SpokeVert && mb.role == Member::SpokeVert && ma.sid == mb.sid &&
      ma.idx == mb.idx) {
    r.sid = ma.sid;
    r.is_spoke = true;
    r.idx = ma.idx;
    r.a = ma.pos;
    r.b = mb.pos;
    return r;
  }
  throw InternalError("segment is not inside a single integral path or spoke");
}

// Oriented view of a segment's containing line. For integral paths the line is
// oriented along the segment; spokes keep their stored A-to-hub orientation
// (segments inside spokes always run toward the A-end).
struct SegLoc {
  int sid = -1;
  bool is_spoke = false;
  int idx = 0;
  std::vector<Vertex> line;
  bool flipped = false;
  int s_pos = 0, t_pos = 0;

  int map_raw(int rawpos) const {
    return flipped ? static_cast<int>(line.size()) - 1 - rawpos : rawpos;
  }
};

SegLoc locate(const BasicPacking& y, const Walk& seg) {
  RawPos r = raw_pos(y, seg);
  SegLoc L;
  L.sid = r.sid;
  L.is_spoke = r.is_spoke;
  L.idx = r.idx;
  if (!r.is_spoke) {
    L.line = y.at(r.sid).path;
    L.flipped = r.a > r.b;
    if (L.flipped) std::reverse(L.line.begin(), L.line.end());
    L.s_pos = L.map_raw(r.a);
    L.t_pos = L.map_raw(r.b);
  } else {
    L.line = y.at(r.sid).wheel.spokes[static_cast<size_t>(r.idx)];
    L.s_pos = r.a;
    L.t_pos = r.b;
    if (L.s_pos <= L.t_pos) throw InternalError("spoke segment must run toward the A-end");
  }
  return L;
}

// Forward part: the piece of the containing line from its start (A-end of an
// integral path; hub of a spoke) to the segment's start.
Walk fpart(const SegLoc& L) {
  if (!L.is_spoke) return Walk(L.line.begin(), L.line.begin() + L.s_pos + 1);
  Walk w(L.line.begin() + L.s_pos, L.line.end());
  return reversed(w);
}

// Backward part: the piece from the line's other end to the segment's end.
Walk bpart(const SegLoc& L) {
  if (!L.is_spoke) {
    Walk w(L.line.begin() + L.t_pos, L.line.end());
    return reversed(w);
  }
  return Walk(L.line.begin(), L.line.begin() + L.t_pos + 1);
}

Walk line_between(const std::vector<Vertex>& line, int from, int to) {
  Walk w;
  int step = to >= from ? 1 : -1;
  for (int j = from; j != to + step; j += step) w.push_back(line[static_cast<size_t>(j)]);
  return w;
}

bool walk_conflicting(const Instance& inst, const Oracle& o, const Walk& w) {
  OState s = astar(inst, o, w);
  if (s == kAllState) return false;
  return o.test(s, o.init(inst, w.back()));
}

bool walks_equiv(const Instance& inst, const Oracle& o, const Walk& a, const Walk& b) {
  OState sa = astar(inst, o, a);
  OState sb = astar(inst, o, b);
  if (sa == kAllState || sb == kAllState)
    throw InternalError("equivalence test on a non-implicational walk");
  return !o.test(sa, sb);
}

bool is_trivial(const Segments& s) { return s.empty() || (s.size() == 1 && s[0].size() < 2); }

// ---------------------------------------------------------------------------
// Simplification: consume the first structure segment, rewriting its container
// to first-segment + forward-part and merging the backward part into the walk.

void replace_container(BasicPacking& y, const SegLoc& L, const Walk& np) {
  if (!L.is_spoke) {
    y.remove(L.sid);
    y.add_path(np);
  } else {
    Wheel w = y.at(L.sid).wheel;
    w.spokes[static_cast<size_t>(L.idx)] = np;
    y.remove(L.sid);
    y.add_wheel(std::move(w));
  }
}

void simplify_once(BasicPacking& y, Segments& P) {
  if (P.size() < 2) throw InternalError("simplify needs a structure segment");
  SegLoc L = locate(y, P[1]);
  Walk B = bpart(L);
  replace_container(y, L, concat(P[0], reversed(fpart(L))));
  Segments out;
  out.push_back(P.size() >= 3 ? concat(B, P[2]) : B);
  for (size_t i = 3; i < P.size(); i++) out.push_back(P[i]);
  P = std::move(out);
}

void simplify_full(BasicPacking& y, Segments& P) {
  while (P.size() > 1) simplify_once(y, P);
}

// Simplifies a pair with a shared prefix of r segments (r even) in lockstep.
// The structure rewrites driven by either side coincide, so they are applied
// once; the merged tails are tracked for both sides.
void simplify_pair(BasicPacking& y, Segments& P, Segments& Q, size_t r) {
  if (r % 2 != 0) throw InternalError("pair simplification needs an even prefix");
  for (size_t step = 0; step + 1 < r; step += 2) {
    SegLoc Lp = locate(y, P[1]);
    SegLoc Lq = locate(y, Q[1]);
    if (Lp.sid != Lq.sid) throw InternalError("pair prefix diverged during simplification");
    Walk Bp = bpart(Lp);
    Walk Bq = bpart(Lq);
    replace_container(y, Lp, concat(P[0], reversed(fpart(Lp))));
    auto merge = [](Segments& S, Walk& B) {
      Segments out;
      out.push_back(S.size() >= 3 ? concat(B, S[2]) : B);
      for (size_t i = 3; i < S.size(); i++) out.push_back(S[i]);
      S = std::move(out);
    };
    merge(P, Bp);
    merge(Q, Bq);
  }
}

// ---------------------------------------------------------------------------
// Augmenting path insertion.

void do_augment_path(const Instance& inst, const Oracle& o, BasicPacking& y, Segments P) {
  if (P.empty()) throw InternalError("empty augmenting path");
  simplify_full(y, P);
  const Walk& w = P[0];
  if (w.size() < 2) throw InternalError("degenerate augmenting path");
  Vertex t = w.back();
  Member m = y.member(t);
  if (m.role == Member::Free) {
    if (!inst.in_A(t)) throw InternalError("free augmenting-path target without an assignment");
    y.add_path(w);
    return;
  }
  if (m.role == Member::CycleVert) {
    // Entering the half-integral cycle: bypass it on one of the two sides and
    // break the remaining sectors into integral paths.
    const Wheel& wh = y.at(m.sid).wheel;
    int c = m.idx, d = wh.degree();
    const auto& arc = wh.arcs[static_cast<size_t>(c)];
    Walk pre(arc.begin(), arc.begin() + m.pos + 1);
    Walk suf(arc.begin() + m.pos, arc.end());
    Walk cand1 = concat(concat(wh.spokes[static_cast<size_t>(c)], pre), reversed(w));
    Walk cand2 = concat(concat(wh.spokes[static_cast<size_t>((c + 1) % d)], reversed(suf)), reversed(w));
    Walk chosen;
    int used_spoke;
    if (walk_conflicting(inst, o, cand1)) {
      chosen = std::move(cand1);
      used_spoke = c;
    } else if (walk_conflicting(inst, o, cand2)) {
      chosen = std::move(cand2);
      used_spoke = (c + 1) % d;
    } else {
      throw InternalError("no conflicting cycle bypass");
    }
    // The sector decomposition must avoid the spoke consumed by the bypass.
    std::vector<Walk> paths = y.decompose_wheel(m.sid, used_spoke);
    y.remove(m.sid);
    for (Walk& pw : paths) y.add_path(std::move(pw));
    y.add_path(std::move(chosen));
    return;
  }
  if (m.role == Member::SpokeVert) {
    // Entering a spoke with a disagreeing tail: redirect the spoke's lower
    // part onto the new path and break the remaining sectors.
    const Wheel& wh = y.at(m.sid).wheel;
    int c = m.idx;
    const auto& sp = wh.spokes[static_cast<size_t>(c)];
    Walk below(sp.begin(), sp.begin() + m.pos + 1);
    Walk np = concat(w, reversed(below));
    std::vector<Walk> paths = y.decompose_wheel(m.sid, c);
    y.remove(m.sid);
    for (Walk& pw : paths) y.add_path(std::move(pw));
    y.add_path(std::move(np));
    return;
  }
  throw InternalError("augmenting path ends inside an integral path");
}

// ---------------------------------------------------------------------------
// Shortcut: pops trailing segments of Q (merging them into P) until every
// segment of Q but the last lies in the common prefix, or P itself turns into
// an augmenting path, or a structure traversal yields a replacement tail.

bool q_prefix_contained(const Segments& P, const Segments& Q) {
  size_t q = Q.size();
  if (q <= 1) return true;
  if (P.size() < q - 1) return false;
  for (size_t i = 0; i + 2 < q; i++)
    if (P[i] != Q[i]) return false;
  const Walk& a = Q[q - 2];
  const Walk& b = P[q - 2];
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Returns true when P has become an augmenting path.
bool shortcut(const Instance& inst, const Oracle& o, const BasicPacking& y, Segments& P,
              Segments& Q) {
  size_t guard = 2 * (P.size() + Q.size()) + 8;
  while (!q_prefix_contained(P, Q)) {
    if (guard-- == 0) throw InternalError("shortcut did not converge");
    size_t p = P.size(), q = Q.size();
    bool p_odd = p % 2 == 1, q_odd = q % 2 == 1;
    if (q_odd) {
      Walk rev = reversed(Q.back());
      if (p_odd) P.back() = concat(P.back(), rev);
      else P.push_back(std::move(rev));
      Q.pop_back();
      continue;
    }
    if (!p_odd) throw InternalError("pair with two even-segment sides");
    SegLoc L = locate(y, Q.back());
    if (L.is_spoke) {
      // The forward part of the spoke (above Q's entry) may hold segments of
      // P; take the nearest one, otherwise P ends validly on the spoke.
      int best_near = INT_MAX;
      size_t best_idx = 0;
      bool found = false;
      for (size_t i = 1; i < P.size(); i += 2) {
        RawPos rp = raw_pos(y, P[i]);
        if (rp.sid != L.sid || !rp.is_spoke || rp.idx != L.idx) continue;
        int lo = std::min(rp.a, rp.b);
        if (lo < L.s_pos) continue;  // not fully above the entry
        if (lo < best_near) {
          best_near = lo;
          best_idx = i;
          found = true;
        }
      }
      if (!found) return true;
      int from = raw_pos(y, P[best_idx]).a;
      int to = y.member(Q.back().back()).pos;
      Walk W = line_between(L.line, from, to);
      Segments nq(P.begin(), P.begin() + static_cast<std::ptrdiff_t>(best_idx));
      nq.push_back(std::move(W));
      Q = std::move(nq);
      return false;
    }
    // Integral path: scan the forward part for the nearest segment of P or Q.
    int best_hi = -1;
    size_t best_idx = 0;
    bool best_from_p = false;
    int best_s = 0, best_t = 0;
    auto consider = [&](bool from_p, size_t i, const Walk& seg) {
      RawPos rp = raw_pos(y, seg);
      if (rp.sid != L.sid || rp.is_spoke) return;
      int a = L.map_raw(rp.a), b = L.map_raw(rp.b);
      int hi = std::max(a, b);
      if (hi > L.s_pos) return;  // not fully inside the forward part
      if (hi > best_hi) {
        best_hi = hi;
        best_idx = i;
        best_from_p = from_p;
        best_s = a;
        best_t = b;
      }
    };
    for (size_t i = 1; i < P.size(); i += 2) consider(true, i, P[i]);
    for (size_t i = 1; i + 1 < Q.size(); i += 2) consider(false, i, Q[i]);
    bool take = false;
    if (best_hi >= 0 && best_from_p) {
      if (best_s < best_t) {
        take = true;  // same direction as Q's entry
      } else {
        size_t ki = best_idx;
        Walk wa = ki >= 3 ? concat(bpart(locate(y, P[ki - 2])), P[ki - 1]) : P[0];
        SegLoc Lk = locate(y, P[ki]);
        Walk wb = concat(bpart(Lk), reversed(P[ki]));
        if (!walks_equiv(inst, o, wa, wb)) take = true;
      }
    }
    if (take) {
      int from = raw_pos(y, P[best_idx]).a;
      int to = y.member(Q.back().back()).pos;
      Walk W = line_between(y.at(L.sid).path, from, to);
      Segments nq(P.begin(), P.begin() + static_cast<std::ptrdiff_t>(best_idx));
      nq.push_back(std::move(W));
      Q = std::move(nq);
      return false;
    }
    P.push_back(reversed(Q.back()));
    Q.pop_back();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Detour elimination: no two segments of P may share an integral path.

void eliminate_detours(BasicPacking& y, Segments& P) {
  while (true) {
    std::unordered_map<int, int> count;
    for (size_t i = 1; i < P.size(); i += 2) count[raw_pos(y, P[i]).sid]++;
    size_t ai = 0;
    int sid = -1;
    for (size_t i = 1; i < P.size(); i += 2) {
      RawPos rp = raw_pos(y, P[i]);
      if (rp.is_spoke) throw InternalError("detour elimination hit a spoke segment");
      if (count[rp.sid] > 1) {
        ai = i;
        sid = rp.sid;
        break;
      }
    }
    if (sid < 0) return;
    size_t bi = 0;
    for (size_t i = ai + 2; i < P.size(); i += 2)
      if (raw_pos(y, P[i]).sid == sid) {
        bi = i;
        break;
      }
    if (bi == 0) throw InternalError("obstructive segment without a partner");
    SegLoc La = locate(y, P[ai]);
    SegLoc Lb = locate(y, P[bi]);
    Walk Ba = bpart(La);
    Walk Fb = fpart(Lb);
    Walk W = line_between(La.line, La.s_pos, La.map_raw(y.member(P[bi].back()).pos));
    y.remove(sid);
    // Fold the stretch between the two hits into a fresh integral path.
    Segments mid;
    mid.push_back(concat(Ba, P[ai + 1]));
    for (size_t i = ai + 2; i < bi; i++) mid.push_back(P[i]);
    simplify_full(y, mid);
    y.add_path(concat(mid[0], reversed(Fb)));
    // Splice P along the removed path between the two hits.
    Segments np(P.begin(), P.begin() + static_cast<std::ptrdiff_t>(ai - 1));
    Walk merged = concat(P[ai - 1], W);
    if (bi + 1 < P.size()) merged = concat(merged, P[bi + 1]);
    np.push_back(std::move(merged));
    for (size_t i = bi + 2; i < P.size(); i++) np.push_back(P[i]);
    P = std::move(np);
  }
}

// ---------------------------------------------------------------------------
// Final wheel construction for a reduced pair.

void special_pair(BasicPacking& y, Segments& P, Segments& Q) {
  size_t p = P.size(), q = Q.size();
  if (q > p) throw InternalError("pair reduced with more branch segments than trunk segments");
  const Walk& p1 = P[0];
  const Walk& q1 = Q[0];
  size_t c = 0;
  while (c < p1.size() && c < q1.size() && p1[c] == q1[c]) c++;
  if (c == 0) throw InternalError("pair without a common source");

  if (p == 1 && q == 1) {
    Walk R(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(c));
    Walk cyc(p1.begin() + static_cast<std::ptrdiff_t>(c - 1), p1.end());
    cyc = concat(cyc, reversed(Walk(q1.begin() + static_cast<std::ptrdiff_t>(c - 1), q1.end())));
    Wheel w;
    w.arcs = {std::move(cyc)};
    w.spokes = {std::move(R)};
    y.add_wheel(std::move(w));
    return;
  }

  std::vector<int> rm;
  Wheel w;
  if (q == 1) {
    if (c == p1.size()) throw InternalError("branch prefix swallows the first segment");
    size_t d = p % 2 == 1 ? p : p + 1;
    Walk R(p1.begin(), p1.begin() + static_cast<std::ptrdiff_t>(c));
    Walk P1p(p1.begin() + static_cast<std::ptrdiff_t>(c - 1), p1.end());
    Walk Q1p(q1.begin() + static_cast<std::ptrdiff_t>(c - 1), q1.end());
    w.arcs.resize(d);
    w.spokes.resize(d);
    w.arcs[0] = std::move(P1p);
    for (size_t j = 1; j + 1 < d; j++) w.arcs[j] = P[j];
    Vertex t = P.back().back();
    w.arcs[d - 1] = concat(p == d ? P[d - 1] : Walk{t}, reversed(Q1p));
    if (w.arcs[d - 1].size() < 2) throw InternalError("degenerate closing arc");
    w.spokes[0] = std::move(R);
    for (size_t i = 2; i <= d - 1; i += 2) {
      SegLoc L = locate(y, P[i - 1]);
      w.spokes[i - 1] = fpart(L);
      rm.push_back(L.sid);
    }
    for (size_t i = 3; i <= d; i += 2) w.spokes[i - 1] = bpart(locate(y, P[i - 2]));
  } else if (q == 2) {
    size_t d = p;
    if (d % 2 == 0 || d < 3) throw InternalError("two-branch pair needs an odd trunk");
    w.arcs.resize(d);
    w.spokes.resize(d);
    for (size_t i = 1; i <= d - 1; i++) w.arcs[i - 1] = P[i];
    w.arcs[d - 1] = reversed(Q[1]);
    w.spokes[0] = P[0];
    for (size_t i = 2; i <= d - 1; i += 2) {
      SegLoc L = locate(y, P[i - 1]);
      w.spokes[i - 1] = bpart(L);
      rm.push_back(L.sid);
    }
    for (size_t i = 3; i + 2 <= d; i += 2) w.spokes[i - 1] = fpart(locate(y, P[i]));
    w.spokes[d - 1] = bpart(locate(y, Q[1]));
  } else {
    throw InternalError("pair not reduced to one or two branch segments");
  }
  for (int sid : rm) y.remove(sid);
  y.add_wheel(std::move(w));
}

void do_augment_pair(const Instance& inst, const Oracle& o, BasicPacking& y, Segments P,
                     Segments Q) {
  if (is_trivial(Q)) {
    do_augment_path(inst, o, y, std::move(P));
    return;
  }
  if (is_trivial(P)) {
    do_augment_path(inst, o, y, std::move(Q));
    return;
  }
  // First pass pulls P's tail onto Q, second pass pulls Q's tail onto P.
  if (shortcut(inst, o, y, Q, P)) {
    do_augment_path(inst, o, y, std::move(Q));
    return;
  }
  if (shortcut(inst, o, y, P, Q)) {
    do_augment_path(inst, o, y, std::move(P));
    return;
  }
  size_t qh = Q.size();
  size_t r;
  if (qh % 2 == 0) {
    RawPos rp = raw_pos(y, P[qh - 1]);
    RawPos rq = raw_pos(y, Q[qh - 1]);
    bool opposite = rp.sid == rq.sid && !rp.is_spoke && (rp.a < rp.b) != (rq.a < rq.b);
    r = opposite ? qh - 2 : qh;
  } else {
    r = qh - 1;
  }
  simplify_pair(y, P, Q, r);
  // Either side may now be a single zero-length segment anchored at the end
  // of the rewritten path; the pair still closes into a wheel below, with the
  // non-degenerate side as the trunk.
  if (is_trivial(P)) std::swap(P, Q);
  if (is_trivial(P)) throw InternalError("pair vanished during simplification");
  eliminate_detours(y, P);
  special_pair(y, P, Q);
}

}  // namespace

Segments split_segments(const BasicPacking& y, const Walk& w) {
  Segments out;
  if (w.size() <= 1) return out;
  size_t i = 0;
  bool structural = false;
  while (i + 1 < w.size()) {
    size_t j = i;
    while (j + 1 < w.size() && y.edge_in_y(w[j], w[j + 1]) == structural) j++;
    if (j == i) throw InternalError("walk does not alternate with the packing");
    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                     w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    i = j;
    structural = !structural;
  }
  return out;
}

int augment(const Instance& inst, const Oracle& o, BasicPacking& y, const SearchResult& found) {
  int before = y.size2();
  if (found.kind == SearchResult::Path) {
    do_augment_path(inst, o, y, split_segments(y, found.path));
  } else if (found.kind == SearchResult::Pair) {
    do_augment_pair(inst, o, y, split_segments(y, found.path), split_segments(y, found.path2));
  } else {
    throw InternalError("augment called without a search result");
  }
  int gain = y.size2() - before;
  if (gain != 1 && gain != 2) throw InternalError("augmentation changed the packing size incorrectly");
  return gain;
}

}  // namespace zoa
