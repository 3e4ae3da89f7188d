#include "zoa/io.hpp"

#include <fstream>
#include <sstream>

namespace zoa {

namespace {

struct Row {
  int line;
  std::vector<std::string> toks;
};

std::vector<Row> tokenize(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    no++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    Row r{no, {}};
    std::string t;
    while (ss >> t) r.toks.push_back(std::move(t));
    if (!r.toks.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

int64_t to_int(int line, const std::string& s) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

int to_count(int line, const std::string& s, const char* what) {
  int64_t v = to_int(line, s);
  if (v < 0 || v > (int64_t{1} << 30)) fail(line, std::string(what) + " out of range: " + s);
  return static_cast<int>(v);
}

Vertex to_vertex(int line, const std::string& s, int n) {
  int64_t v = to_int(line, s);
  if (v < 1 || v > n) fail(line, "vertex id out of range: " + s);
  return static_cast<Vertex>(v - 1);
}

void need(const Row& r, size_t count, const char* shape) {
  if (r.toks.size() != count) fail(r.line, std::string("expected '") + shape + "'");
}

GroupPtr load_table_group(int line, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(line, "cannot open group table file: " + path);
  std::vector<Row> rows = tokenize(in);
  std::vector<int64_t> nums;
  int last_line = line;
  for (const Row& r : rows) {
    for (const std::string& t : r.toks) nums.push_back(to_int(r.line, t));
    last_line = r.line;
  }
  if (nums.empty()) fail(line, "empty group table file: " + path);
  int64_t q = nums[0];
  if (q <= 0 || static_cast<int64_t>(nums.size()) != 1 + q * q)
    fail(last_line, "group table file must hold the order q followed by q*q products");
  std::vector<std::vector<int64_t>> table(static_cast<size_t>(q));
  for (int64_t i = 0; i < q; i++)
    table[static_cast<size_t>(i)].assign(nums.begin() + 1 + i * q, nums.begin() + 1 + (i + 1) * q);
  return std::make_shared<TableGroup>(std::move(table));
}

// Formats with a fixed `p <fmt> n m` header followed by edge rows.
template <class EdgeRow>
void parse_edges(const std::vector<Row>& rows, int m, EdgeRow&& edge_row) {
  int seen = 0;
  for (size_t i = 1; i < rows.size(); i++) {
    if (rows[i].toks[0] != "e") fail(rows[i].line, "expected an 'e' line");
    edge_row(rows[i]);
    seen++;
  }
  if (seen != m) {
    int line = rows.empty() ? 0 : rows.back().line;
    fail(line, "edge count mismatch: header says " + std::to_string(m) + ", file has " +
                   std::to_string(seen));
  }
}

std::string join_int(const std::vector<Value>& xs) {
  std::string out;
  for (Value x : xs) {
    out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

ProblemInstance parse_problem(std::istream& in, const std::string& base_dir) {
  std::vector<Row> rows = tokenize(in);
  if (rows.empty()) throw InputError("line 1: empty instance file");
  const Row& h = rows[0];
  if (h.toks[0] != "p" || h.toks.size() < 2) fail(h.line, "expected a 'p <format> ...' header");
  const std::string& fmt = h.toks[1];

  if (fmt == "mwc") {
    need(h, 4, "p mwc n m");
    MultiwayCutProblem p;
    p.n = to_count(h.line, h.toks[2], "n");
    int m = to_count(h.line, h.toks[3], "m");
    int seen = 0;
    for (size_t i = 1; i < rows.size(); i++) {
      const Row& r = rows[i];
      if (r.toks[0] == "t") {
        need(r, 2, "t v");
        p.terminals.push_back(to_vertex(r.line, r.toks[1], p.n));
      } else if (r.toks[0] == "e") {
        need(r, 3, "e u v");
        p.edges.push_back({to_vertex(r.line, r.toks[1], p.n), to_vertex(r.line, r.toks[2], p.n)});
        seen++;
      } else {
        fail(r.line, "expected a 't' or 'e' line");
      }
    }
    if (seen != m) fail(rows.back().line, "edge count mismatch with header");
    return p;
  }

  if (fmt == "sfvs" || fmt == "spd") {
    need(h, 4, "p sfvs|spd n m");
    int n = to_count(h.line, h.toks[2], "n");
    int m = to_count(h.line, h.toks[3], "m");
    std::vector<SubsetEdge> es;
    parse_edges(rows, m, [&](const Row& r) {
      need(r, 4, "e u v s");
      int64_t s = to_int(r.line, r.toks[3]);
      if (s != 0 && s != 1) fail(r.line, "S-membership flag must be 0 or 1");
      es.push_back({to_vertex(r.line, r.toks[1], n), to_vertex(r.line, r.toks[2], n), s == 1});
    });
    if (fmt == "sfvs") {
      SubsetFvsProblem p;
      p.n = n;
      p.edges = std::move(es);
      return p;
    }
    SubsetPseudoforestProblem p;
    p.n = n;
    p.edges = std::move(es);
    return p;
  }

  if (fmt == "nmct" || fmt == "mod") {
    need(h, 4, "p nmct|mod n m");
    int n = to_count(h.line, h.toks[2], "n");
    int m = to_count(h.line, h.toks[3], "m");
    std::vector<ColoredEdge> es;
    int colors = 1;
    parse_edges(rows, m, [&](const Row& r) {
      need(r, 4, "e u v color");
      int c = to_count(r.line, r.toks[3], "color");
      colors = std::max(colors, c + 1);
      es.push_back({to_vertex(r.line, r.toks[1], n), to_vertex(r.line, r.toks[2], n), c});
    });
    if (fmt == "nmct") {
      NonMonoProblem p;
      p.n = n;
      p.num_colors = colors;
      p.edges = std::move(es);
      return p;
    }
    MonoOrientProblem p;
    p.n = n;
    p.num_colors = colors;
    p.edges = std::move(es);
    return p;
  }

  if (fmt == "gfvs") {
    need(h, 6, "p gfvs n m zq q | p gfvs n m table <file>");
    GroupFvsProblem p;
    p.n = to_count(h.line, h.toks[2], "n");
    int m = to_count(h.line, h.toks[3], "m");
    int64_t order;
    if (h.toks[4] == "zq") {
      order = to_count(h.line, h.toks[5], "q");
      if (order <= 0) fail(h.line, "group order must be positive");
      p.group = std::make_shared<CyclicGroup>(order);
    } else if (h.toks[4] == "table") {
      std::string path = h.toks[5];
      if (!base_dir.empty() && path.front() != '/') path = base_dir + "/" + path;
      p.group = load_table_group(h.line, path);
      order = std::static_pointer_cast<TableGroup>(p.group)->order();
    } else {
      fail(h.line, "group spec must be 'zq q' or 'table <file>'");
    }
    parse_edges(rows, m, [&](const Row& r) {
      need(r, 4, "e u v g");
      int64_t g = to_int(r.line, r.toks[3]);
      if (g < 0 || g >= order) fail(r.line, "group label out of range");
      p.edges.push_back({to_vertex(r.line, r.toks[1], p.n), to_vertex(r.line, r.toks[2], p.n), g});
    });
    return p;
  }

  if (fmt == "nulc") {
    need(h, 5, "p nulc n m sigma");
    NulcProblem p;
    p.n = to_count(h.line, h.toks[2], "n");
    int m = to_count(h.line, h.toks[3], "m");
    p.sigma = to_count(h.line, h.toks[4], "sigma");
    parse_edges(rows, m, [&](const Row& r) {
      if (r.toks.size() != 3 + static_cast<size_t>(p.sigma))
        fail(r.line, "expected 'e u v' followed by sigma permutation images");
      NulcProblem::E e;
      e.u = to_vertex(r.line, r.toks[1], p.n);
      e.v = to_vertex(r.line, r.toks[2], p.n);
      for (int i = 0; i < p.sigma; i++) {
        int64_t img = to_int(r.line, r.toks[3 + static_cast<size_t>(i)]);
        if (img < 0 || img >= p.sigma) fail(r.line, "permutation image out of range");
        e.perm.push_back(img);
      }
      p.edges.push_back(std::move(e));
    });
    return p;
  }

  if (fmt == "tfd") {
    need(h, 3, "p tfd n");
    int n = to_count(h.line, h.toks[2], "n");
    TwoFanProblem p;
    p.domains.assign(static_cast<size_t>(n), 1);
    for (size_t i = 1; i < rows.size(); i++) {
      const Row& r = rows[i];
      if (r.toks[0] == "d") {
        need(r, 3, "d v size");
        Vertex v = to_vertex(r.line, r.toks[1], n);
        int d = to_count(r.line, r.toks[2], "domain size");
        if (d < 1) fail(r.line, "domain size must be positive");
        p.domains[static_cast<size_t>(v)] = d;
      } else if (r.toks[0] == "fan") {
        need(r, 5, "fan u v a b");
        p.fans.push_back({to_vertex(r.line, r.toks[1], n), to_vertex(r.line, r.toks[2], n),
                          to_int(r.line, r.toks[3]), to_int(r.line, r.toks[4])});
      } else {
        fail(r.line, "expected a 'd' or 'fan' line");
      }
    }
    for (const auto& f : p.fans)
      if (f.a < 0 || f.a >= p.domains[static_cast<size_t>(f.u)] || f.b < 0 ||
          f.b >= p.domains[static_cast<size_t>(f.v)])
        throw InputError("two-fan pin out of the declared domain");
    return p;
  }

  if (fmt == "zoa") {
    need(h, 3, "p zoa n");
    int n = to_count(h.line, h.toks[2], "n");
    GenericProblem p;
    p.inst = Instance(n);
    for (Vertex v = 0; v < n; v++) p.inst.set_domain(v, 1);
    // Domains first, so constraint rows can appear in any order.
    for (size_t i = 1; i < rows.size(); i++) {
      const Row& r = rows[i];
      if (r.toks[0] != "d") continue;
      need(r, 3, "d v size");
      Vertex v = to_vertex(r.line, r.toks[1], n);
      int d = to_count(r.line, r.toks[2], "domain size");
      if (d < 1) fail(r.line, "domain size must be positive");
      p.inst.set_domain(v, d);
    }
    for (size_t i = 1; i < rows.size(); i++) {
      const Row& r = rows[i];
      try {
        if (r.toks[0] == "d") {
          continue;
        } else if (r.toks[0] == "perm") {
          if (r.toks.size() < 3) fail(r.line, "expected 'perm u v i_0 ...'");
          Vertex u = to_vertex(r.line, r.toks[1], n), v = to_vertex(r.line, r.toks[2], n);
          std::vector<Value> table;
          for (size_t j = 3; j < r.toks.size(); j++) table.push_back(to_int(r.line, r.toks[j]));
          p.inst.add_perm(u, v, std::move(table));
        } else if (r.toks[0] == "fan") {
          need(r, 5, "fan u v a b");
          p.inst.add_fan(to_vertex(r.line, r.toks[1], n), to_vertex(r.line, r.toks[2], n),
                         to_int(r.line, r.toks[3]), to_int(r.line, r.toks[4]));
        } else if (r.toks[0] == "a") {
          need(r, 3, "a v value");
          p.inst.set_phi(to_vertex(r.line, r.toks[1], n), to_int(r.line, r.toks[2]));
        } else {
          fail(r.line, "expected a 'd', 'perm', 'fan', or 'a' line");
        }
      } catch (const InputError& e) {
        std::string what = e.what();
        if (what.rfind("line ", 0) == 0) throw;
        fail(r.line, what);
      }
    }
    return p;
  }

  fail(h.line, "unknown format: " + fmt);
}

ProblemInstance load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::string dir = ".";
  size_t slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return parse_problem(in, dir);
}

std::string dump_problem(const ProblemInstance& pi) {
  std::ostringstream out;
  auto v1 = [](Vertex v) { return std::to_string(v + 1); };

  if (const auto* p = std::get_if<MultiwayCutProblem>(&pi)) {
    out << "p mwc " << p->n << ' ' << p->edges.size() << '\n';
    for (Vertex t : p->terminals) out << "t " << v1(t) << '\n';
    for (auto [u, v] : p->edges) out << "e " << v1(u) << ' ' << v1(v) << '\n';
  } else if (const auto* p = std::get_if<SubsetFvsProblem>(&pi)) {
    out << "p sfvs " << p->n << ' ' << p->edges.size() << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << ' ' << (e.in_s ? 1 : 0) << '\n';
  } else if (const auto* p = std::get_if<SubsetPseudoforestProblem>(&pi)) {
    out << "p spd " << p->n << ' ' << p->edges.size() << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << ' ' << (e.in_s ? 1 : 0) << '\n';
  } else if (const auto* p = std::get_if<NonMonoProblem>(&pi)) {
    out << "p nmct " << p->n << ' ' << p->edges.size() << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << ' ' << e.color << '\n';
  } else if (const auto* p = std::get_if<MonoOrientProblem>(&pi)) {
    out << "p mod " << p->n << ' ' << p->edges.size() << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << ' ' << e.color << '\n';
  } else if (const auto* p = std::get_if<GroupFvsProblem>(&pi)) {
    const auto* cyc = dynamic_cast<const CyclicGroup*>(p->group.get());
    if (!cyc) throw InputError("only cyclic groups can be serialized inline");
    out << "p gfvs " << p->n << ' ' << p->edges.size() << " zq " << cyc->order() << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << ' ' << e.label << '\n';
  } else if (const auto* p = std::get_if<NulcProblem>(&pi)) {
    out << "p nulc " << p->n << ' ' << p->edges.size() << ' ' << p->sigma << '\n';
    for (const auto& e : p->edges)
      out << "e " << v1(e.u) << ' ' << v1(e.v) << join_int(e.perm) << '\n';
  } else if (const auto* p = std::get_if<TwoFanProblem>(&pi)) {
    out << "p tfd " << p->domains.size() << '\n';
    for (size_t v = 0; v < p->domains.size(); v++)
      out << "d " << v + 1 << ' ' << p->domains[v] << '\n';
    for (const auto& f : p->fans)
      out << "fan " << v1(f.u) << ' ' << v1(f.v) << ' ' << f.a << ' ' << f.b << '\n';
  } else if (const auto* p = std::get_if<GenericProblem>(&pi)) {
    const Instance& inst = p->inst;
    out << "p zoa " << inst.n() << '\n';
    for (Vertex v = 0; v < inst.n(); v++) {
      if (inst.domain(v) == kGroupDomain)
        throw InputError("group-domain native instances cannot be serialized");
      out << "d " << v1(v) << ' ' << inst.domain(v) << '\n';
    }
    for (int e = 0; e < inst.m(); e++) {
      const Edge& ed = inst.edge(e);
      switch (ed.c.kind) {
        case CKind::Perm:
          out << "perm " << v1(ed.u) << ' ' << v1(ed.v) << join_int(ed.c.fwd) << '\n';
          break;
        case CKind::Fan:
          out << "fan " << v1(ed.u) << ' ' << v1(ed.v) << ' ' << ed.c.a << ' ' << ed.c.b << '\n';
          break;
        default:
          throw InputError("group-edge native instances cannot be serialized");
      }
    }
    for (Vertex a : inst.a_vertices()) {
      if (inst.phi(a) == kUnknownPhi) throw InputError("untracked assignments cannot be serialized");
      out << "a " << v1(a) << ' ' << inst.phi(a) << '\n';
    }
  } else {
    throw InputError("unsupported problem variant in dump");
  }
  return out.str();
}

std::vector<Vertex> parse_witness(std::istream& in) {
  std::vector<Vertex> out;
  for (const Row& r : tokenize(in))
    for (const std::string& t : r.toks) {
      int64_t v = to_int(r.line, t);
      if (v < 1) fail(r.line, "witness ids are 1-based");
      out.push_back(static_cast<Vertex>(v - 1));
    }
  return out;
}

std::string dump_witness(const std::vector<Vertex>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  out += '\n';
  return out;
}

}  // namespace zoa
