#include <doctest.h>

#include "fixtures.hpp"
#include "zoa/oracle.hpp"

using namespace zoa;

TEST_CASE("naive oracle matches direct propagation") {
  std::mt19937 rng(4242);
  NaiveOracle o;
  for (int it = 0; it < 300; it++) {
    Instance inst = fixtures::random_group_instance(rng, 8, 6, 3, 3);
    const auto& av = inst.a_vertices();
    if (av.empty()) continue;
    std::uniform_int_distribution<size_t> pa(0, av.size() - 1);
    Walk w = fixtures::random_walk(rng, inst, av[pa(rng)], 6);
    if (w.empty()) continue;
    OState st = astar(inst, o, w);
    Value direct = imp_walk(inst, w);
    if (direct == kNotImp) {
      CHECK(st == kAllState);
    } else {
      CHECK(st == direct);
    }
    if (inst.in_A(w.back())) {
      bool conf = st != kAllState && o.test(st, o.init(inst, w.back()));
      CHECK(conf == is_conflicting(inst, w));
    }
  }
}

TEST_CASE("naive oracle handles fan saturation") {
  Instance inst(3);
  for (Vertex v = 0; v < 3; v++) inst.set_domain(v, 2);
  inst.add_fan(0, 1, 0, 1);
  inst.add_identity(1, 2);
  inst.set_phi(0, 0);
  inst.set_phi(2, 0);
  NaiveOracle o;
  CHECK(astar(inst, o, Walk{0, 1, 2}) == kAllState);
  inst.set_tracks_ground_truth(true);
  CHECK_FALSE(is_conflicting(inst, Walk{0, 1, 2}));
}

TEST_CASE("init token overrides tracked assignment") {
  Instance inst = fixtures::conflict_path();
  NaiveOracle o;
  Vertex tp = inst.add_contraction(1, 0, 0);
  CHECK(o.init(inst, tp) == 0);
  OState st = astar(inst, o, Walk{tp, 1, 2, 3});
  CHECK(st == 0);
  CHECK(o.test(st, o.init(inst, 3)));
  inst.pop_contraction();
}

TEST_CASE("oracle stats accumulate") {
  Instance inst = fixtures::conflict_path();
  NaiveOracle o;
  auto before = o.stats().total();
  astar(inst, o, Walk{0, 1, 2, 3});
  CHECK(o.stats().total() == before + 4);  // one init + three appends
}

TEST_CASE("last-marked-edge oracle distinguishes marked traversals") {
  // Path 0-1-2-3 where edge (1,2) is marked: two walks from an assigned start
  // conflict iff their last marked edges differ.
  Instance inst(4);
  auto grp = std::make_shared<XorSetGroup>();
  inst.set_group(grp);
  for (Vertex v = 0; v < 4; v++) inst.set_domain(v, kGroupDomain);
  inst.add_group_edge(0, 1, grp->identity());
  int e12 = inst.add_group_edge(1, 2, grp->intern({1}));
  inst.add_group_edge(2, 3, grp->identity());
  inst.edge_mut(e12).in_s = true;
  inst.edge_mut(e12).label = 7;
  inst.set_phi(0, grp->identity());
  inst.set_phi(3, grp->identity());

  SubsetFvsOracle o;
  OState a = astar(inst, o, Walk{0, 1, 2, 3});
  OState b = o.init(inst, 3);
  CHECK(a == 8);  // label 7 + 1
  CHECK(b == 0);
  CHECK(o.test(a, b));
  // Ground truth via the set group agrees: the walk flips element {1}.
  CHECK(is_conflicting(inst, Walk{0, 1, 2, 3}));
  CHECK_FALSE(is_conflicting(inst, Walk{0, 1, 0}));
  OState back = astar(inst, o, Walk{0, 1, 2, 1, 0});
  // Walk traverses the marked edge twice; last marked edge is still 7, so the
  // restricted test misfires on this non-single-branching pair, while the
  // ground truth says non-conflicting. This is exactly the allowed scope gap.
  CHECK(back == 8);
  CHECK_FALSE(is_conflicting(inst, Walk{0, 1, 2, 1, 0}));
}

TEST_CASE("monochromatic-suffix oracle on a two-colored triangle") {
  // Triangle 0-1-2 colored: edges (0,1) and (1,2) color 0, (2,0) color 1.
  Instance inst(3);
  for (Vertex v = 0; v < 3; v++) inst.set_domain(v, 1);
  inst.set_tracks_ground_truth(false);
  int e01 = inst.add_fan(0, 1, 0, 0);
  int e12 = inst.add_fan(1, 2, 0, 0);
  int e20 = inst.add_fan(2, 0, 0, 0);
  inst.edge_mut(e01).color = 0;
  inst.edge_mut(e12).color = 0;
  inst.edge_mut(e20).color = 1;
  inst.set_phi(0, kUnknownPhi);

  NonMonoOracle o(2);
  // 0 -> 1 -> 2: monochromatic suffix starts at vertex 0 with color 0.
  OState s1 = astar(inst, o, Walk{0, 1, 2});
  // 0 -> 2 (color 1): suffix starts at 0 with color 1.
  OState s2 = astar(inst, o, Walk{0, 2});
  CHECK(s1 != s2);
  CHECK(o.test(s1, s2));
  // Closing a monochromatic cycle is never a conflict witness.
  Instance mono(3);
  for (Vertex v = 0; v < 3; v++) mono.set_domain(v, 1);
  mono.set_tracks_ground_truth(false);
  int f01 = mono.add_fan(0, 1, 0, 0);
  int f12 = mono.add_fan(1, 2, 0, 0);
  int f20 = mono.add_fan(2, 0, 0, 0);
  for (int e : {f01, f12, f20}) mono.edge_mut(e).color = 0;
  mono.set_phi(0, kUnknownPhi);
  OState closed = astar(mono, o, Walk{0, 1, 2, 0});
  CHECK_FALSE(o.test(closed, o.init(mono, 0)));
}
