#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "zoa/fpt.hpp"
#include "zoa/verify.hpp"

using namespace zoa;

namespace {

bool witness_works(const Instance& inst, const std::vector<Vertex>& w) {
  std::vector<char> del(static_cast<size_t>(inst.n()), 0);
  for (Vertex v : w) {
    if (v < 0 || v >= inst.n()) return false;
    del[static_cast<size_t>(v)] = 1;
  }
  return deletion_satisfiable(inst, del);
}

// Smallest k for which a deletion set exists, by exhaustive search.
int brute_opt(const Instance& inst) {
  for (int k = 0; k <= inst.n(); k++)
    if (brute_min_deletion(inst, k)) return k;
  return inst.n() + 1;  // unreachable: deleting everything always works
}

// Runs the solver for every budget around the brute-force optimum and checks
// the answers, the witnesses, and the recursion-size bound.
void check_solver(const Instance& inst, const Oracle& o, Strategy s = Strategy::Auto) {
  int opt = brute_opt(inst);
  REQUIRE(opt <= inst.n());
  int maxd = 2;
  for (Vertex v = 0; v < inst.n(); v++) maxd = std::max(maxd, inst.domain(v));
  for (int k = std::max(0, opt - 1); k <= opt + 1; k++) {
    SolveResult r = solve_deletion(inst, o, k, s);
    CAPTURE(k);
    CAPTURE(opt);
    CHECK(r.yes == (k >= opt));
    if (r.yes) {
      CHECK(static_cast<int>(r.witness.size()) <= k);
      CHECK(witness_works(inst, r.witness));
    }
    // The slack k - |x| shrinks by at least one half per level and every node
    // branches into at most max(2, |D|) children.
    double bound = std::pow(static_cast<double>(maxd), 2 * k + 3);
    CHECK(static_cast<double>(r.stats.nodes) <= bound);
  }
}

}  // namespace

TEST_CASE("deleting the star center separates the terminals") {
  Instance inst = fixtures::star_multiway();
  NaiveOracle o;
  SolveResult r1 = solve_deletion(inst, o, 1);
  REQUIRE(r1.yes);
  CHECK(r1.witness == std::vector<Vertex>{0});
  CHECK_FALSE(solve_deletion(inst, o, 0).yes);
  check_solver(inst, o);
}

TEST_CASE("deterministic fixtures against exhaustive search") {
  NaiveOracle o;
  for (auto make : {fixtures::z2_triangle, fixtures::conflict_path, fixtures::swap_cycle}) {
    Instance inst = make();
    check_solver(inst, o);
  }
}

TEST_CASE("deleting a vertex matches deletion on the input") {
  Instance inst = fixtures::conflict_path();
  Residual r = make_residual(inst);
  Residual d = residual_delete(r, 1);
  CHECK(d.inst.n() == 3);
  CHECK(d.orig == std::vector<Vertex>{0, 2, 3});
  std::vector<char> del(4, 0);
  del[1] = 1;
  CHECK(deletion_satisfiable(inst, del) ==
        deletion_satisfiable(d.inst, std::vector<char>(3, 0)));
}

TEST_CASE("fixing promotes neighbors and removes contradicted ones") {
  // Chain 0-1-2-3, phi(0)=0 and phi(1)=1 contradict directly.
  Instance inst = fixtures::conflict_path();
  inst.set_phi(1, 1);
  NaiveOracle o;
  Residual r = make_residual(inst);
  std::vector<Vertex> conflicted;
  Residual f = residual_fix(r, o, 0, conflicted);
  CHECK(conflicted == std::vector<Vertex>{1});
  CHECK(f.inst.n() == 2);
  CHECK(f.orig == std::vector<Vertex>{2, 3});
  // Fixing 3 instead promotes 2 with the propagated value.
  conflicted.clear();
  Residual g = residual_fix(r, o, 3, conflicted);
  CHECK(conflicted.empty());
  CHECK(g.inst.n() == 3);
  Vertex two = -1;
  for (Vertex v = 0; v < 3; v++)
    if (g.orig[static_cast<size_t>(v)] == 2) two = v;
  REQUIRE(two >= 0);
  CHECK(g.inst.in_A(two));
  CHECK(g.inst.phi(two) == 1);
  CHECK(g.inst.has_init_token(two));
}

TEST_CASE("the two-way branch is exact on random instances") {
  NaiveOracle o;
  for (uint32_t seed = 0; seed < 150; seed++) {
    std::mt19937 rng(seed ^ 0x51e0cafeu);
    int n = 5 + static_cast<int>(seed % 4);
    Instance inst = fixtures::random_cst_instance(rng, n, static_cast<int>(seed % 6),
                                                  2 + static_cast<int>(seed % 2),
                                                  1 + static_cast<int>(seed % 3));
    CAPTURE(seed);
    REQUIRE(!inst.a_vertices().empty());
    Residual r = make_residual(inst);
    Vertex u = inst.a_vertices()[0];
    for (int k = 0; k <= 3; k++) {
      bool whole = brute_min_deletion(inst, k).has_value();
      bool del = k >= 1 && brute_min_deletion(residual_delete(r, u).inst, k - 1).has_value();
      std::vector<Vertex> conflicted;
      Residual f = residual_fix(r, o, u, conflicted);
      int kf = k - static_cast<int>(conflicted.size());
      bool fix = kf >= 0 && brute_min_deletion(f.inst, kf).has_value();
      CAPTURE(k);
      CHECK(whole == (del || fix));
    }
  }
}

TEST_CASE("persistency of the farthest cover") {
  NaiveOracle o;
  for (uint32_t seed = 0; seed < 150; seed++) {
    std::mt19937 rng(seed ^ 0xfeedbeefu);
    int n = 5 + static_cast<int>(seed % 4);
    Instance inst = fixtures::random_cst_instance(rng, n, static_cast<int>(seed % 6),
                                                  2 + static_cast<int>(seed % 3),
                                                  1 + static_cast<int>(seed % 3));
    CAPTURE(seed);
    FarthestResult fx = farthest_cover(inst, o);
    REQUIRE(fx.within_cap);
    std::vector<Vertex> ones, avoid;
    std::vector<char> reach = reachable_zero(inst, fx.x2);
    for (Vertex v = 0; v < inst.n(); v++) {
      if (fx.x2[static_cast<size_t>(v)] == 2) ones.push_back(v);
      if (reach[static_cast<size_t>(v)]) avoid.push_back(v);
    }
    int opt = brute_opt(inst);
    // Some optimal deletion set contains every integral vertex and avoids
    // everything reachable at zero cost.
    auto constrained = brute_min_deletion(inst, opt, ones, avoid);
    CHECK(constrained.has_value());
  }
}

TEST_CASE("branching sets by strategy") {
  Instance tri = fixtures::z2_triangle();
  Instance grp(3);
  grp.set_group(tri.group());
  for (Vertex v = 0; v < 3; v++) grp.set_domain(v, kGroupDomain);
  grp.add_group_edge(0, 1, 0);
  auto b = branching_set(grp, Strategy::Auto);
  REQUIRE(b.size() == 1);
  CHECK(b[0].v == 0);
  CHECK(b[0].a == grp.group()->identity());

  Instance fan(3);
  for (Vertex v = 0; v < 3; v++) fan.set_domain(v, 3);
  fan.add_identity(0, 1);
  fan.add_fan(1, 2, 2, 0);
  auto bf = branching_set(fan, Strategy::Auto);
  REQUIRE(bf.size() == 2);
  CHECK(bf[0].v == 1);
  CHECK(bf[0].a == 2);
  CHECK(bf[1].v == 2);
  CHECK(bf[1].a == 0);
  auto bg = branching_set(fan, Strategy::Generic);
  REQUIRE(bg.size() == 3);
  for (Value a = 0; a < 3; a++) {
    CHECK(bg[static_cast<size_t>(a)].v == 0);
    CHECK(bg[static_cast<size_t>(a)].a == a);
  }
}

TEST_CASE("unit propagation detects conflicting components") {
  // Z_2 triangle without assignments: pinning 0 := 0 wraps to a conflict.
  Instance inst = fixtures::z2_triangle();
  Instance bare(3);
  bare.set_group(inst.group());
  for (Vertex v = 0; v < 3; v++) bare.set_domain(v, kGroupDomain);
  bare.add_group_edge(0, 1, 0);
  bare.add_group_edge(1, 2, 0);
  bare.add_group_edge(2, 0, 1);
  NaiveOracle o;
  Residual r = make_residual(bare);
  Residual c = residual_assign(r, 0, 0);
  UnitProp p(c.inst, o, 0);
  while (p.step() == UnitProp::Running) {
  }
  CHECK(p.status() == UnitProp::Conflict);

  // With a consistent closing label the component is clean and fully visited.
  Instance ok(3);
  ok.set_group(inst.group());
  for (Vertex v = 0; v < 3; v++) ok.set_domain(v, kGroupDomain);
  ok.add_group_edge(0, 1, 0);
  ok.add_group_edge(1, 2, 0);
  ok.add_group_edge(2, 0, 0);
  Residual r2 = make_residual(ok);
  Residual c2 = residual_assign(r2, 0, 0);
  UnitProp p2(c2.inst, o, 0);
  while (p2.step() == UnitProp::Running) {
  }
  CHECK(p2.status() == UnitProp::Clean);
  CHECK(p2.visited().size() == 3);
}

TEST_CASE("unassigned group instances are solved via identity pinning") {
  auto g = std::make_shared<CyclicGroup>(2);
  // Two disjoint triangles: one conflicting, one consistent; no assignments.
  Instance inst(6);
  inst.set_group(g);
  for (Vertex v = 0; v < 6; v++) inst.set_domain(v, kGroupDomain);
  inst.add_group_edge(0, 1, 0);
  inst.add_group_edge(1, 2, 0);
  inst.add_group_edge(2, 0, 1);
  inst.add_group_edge(3, 4, 0);
  inst.add_group_edge(4, 5, 0);
  inst.add_group_edge(5, 3, 0);
  NaiveOracle o;
  CHECK_FALSE(solve_deletion(inst, o, 0).yes);
  SolveResult r = solve_deletion(inst, o, 1);
  REQUIRE(r.yes);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0] <= 2);
  CHECK(witness_works(inst, r.witness));
  check_solver(inst, o);
}

TEST_CASE("fuzz: solver answers match exhaustive search on group instances") {
  NaiveOracle o;
  for (uint32_t seed = 0; seed < 500; seed++) {
    std::mt19937 rng(seed * 2654435761u + 7);
    int n = 5 + static_cast<int>(seed % 4);
    int extra = static_cast<int>(seed % 7);
    int q = 2 + static_cast<int>(seed % 2);
    int num_a = static_cast<int>(seed % 4);  // sometimes no assignments
    Instance inst = fixtures::random_group_instance(rng, n, extra, q, num_a);
    CAPTURE(seed);
    check_solver(inst, o);
  }
}

TEST_CASE("fuzz: solver answers match exhaustive search on finite domains") {
  NaiveOracle o;
  for (uint32_t seed = 0; seed < 500; seed++) {
    std::mt19937 rng(seed ^ 0xabcd1234u);
    int n = 5 + static_cast<int>(seed % 4);
    int extra = static_cast<int>(seed % 7);
    int dsize = 2 + static_cast<int>(seed % 3);
    int num_a = static_cast<int>(seed % 4);
    Instance inst = fixtures::random_cst_instance(rng, n, extra, dsize, num_a);
    CAPTURE(seed);
    check_solver(inst, o);
    if (seed % 5 == 0) check_solver(inst, o, Strategy::Generic);
  }
}
