#include <doctest.h>

#include "fixtures.hpp"
#include "zoa/packing.hpp"

using namespace zoa;

namespace {

// Triangle of hubs 0,1,2 (edges labeled 1 over Z_2) with one spoke each from
// assigned vertices 3,4,5 (spoke edges labeled 0, assignments 0). Every
// sector walk flips parity once, so all three conflict.
Instance wheel3_instance() {
  Instance inst(6);
  inst.set_group(std::make_shared<CyclicGroup>(2));
  for (Vertex v = 0; v < 6; v++) inst.set_domain(v, kGroupDomain);
  inst.add_group_edge(0, 1, 1);
  inst.add_group_edge(1, 2, 1);
  inst.add_group_edge(2, 0, 1);
  for (Vertex i = 0; i < 3; i++) {
    inst.add_group_edge(i + 3, i, 0);
    inst.set_phi(i + 3, 0);
  }
  return inst;
}

Wheel wheel3() {
  Wheel w;
  w.arcs = {{0, 1}, {1, 2}, {2, 0}};
  w.spokes = {{3, 0}, {4, 1}, {5, 2}};
  return w;
}

}  // namespace

TEST_CASE("integral path bookkeeping") {
  Instance inst = fixtures::conflict_path();
  NaiveOracle o;
  BasicPacking y;
  int sid = y.add_path({0, 1, 2, 3});
  CHECK(y.size2() == 2);
  CHECK(y.in_y(1));
  CHECK(y.in_v1(1));
  CHECK(y.vertex_weight2(1) == 2);
  CHECK(y.edge_weight2(1, 2) == 2);
  CHECK(y.edge_weight2(2, 1) == 2);
  CHECK_FALSE(y.edge_in_y(0, 2));
  CHECK(y.member(2).sid == sid);
  CHECK(y.member(2).pos == 2);
  CHECK(validate_packing(inst, o, y).ok);
  y.remove(sid);
  CHECK(y.size2() == 0);
  CHECK_FALSE(y.in_y(1));
  CHECK(y.edge_weight2(1, 2) == 0);
}

TEST_CASE("wheel bookkeeping and navigation") {
  Instance inst = wheel3_instance();
  NaiveOracle o;
  BasicPacking y;
  int sid = y.add_wheel(wheel3());
  CHECK(y.size2() == 3);
  // Hubs are weight-1 spoke vertices; the cycle edges carry weight 1/2.
  for (Vertex h = 0; h < 3; h++) {
    CHECK(y.member(h).role == Member::SpokeVert);
    CHECK(y.vertex_weight2(h) == 2);
  }
  CHECK(y.edge_weight2(0, 1) == 1);
  CHECK(y.edge_weight2(3, 0) == 2);
  CHECK(y.member(3).role == Member::SpokeVert);
  CHECK(y.member(3).pos == 0);
  CHECK(y.spoke_backward(0) == Walk({3, 0}));
  CHECK(y.spoke_forward(0) == Walk({0}));
  CHECK(y.spoke_backward(3) == Walk({3}));
  CHECK(y.spoke_forward(3) == Walk({0, 3}));
  CHECK(validate_packing(inst, o, y).ok);

  auto parts = y.decompose_wheel(sid, 2);
  REQUIRE(parts.size() == 1);
  // Skipping sector 2 keeps sector 0: spoke 0, arc 0, spoke 1 reversed.
  CHECK(parts[0] == Walk({3, 0, 1, 4}));
  CHECK(is_conflicting(inst, parts[0]));

  y.remove(sid);
  CHECK(y.size2() == 0);
  for (Vertex v = 0; v < 6; v++) CHECK_FALSE(y.in_y(v));
}

TEST_CASE("wheel with in-place hubs") {
  // All hubs assigned; spokes are zero-length.
  Instance inst(3);
  inst.set_group(std::make_shared<CyclicGroup>(2));
  for (Vertex v = 0; v < 3; v++) {
    inst.set_domain(v, kGroupDomain);
    inst.set_phi(v, 0);
  }
  inst.add_group_edge(0, 1, 1);
  inst.add_group_edge(1, 2, 1);
  inst.add_group_edge(2, 0, 1);
  NaiveOracle o;
  BasicPacking y;
  Wheel w;
  w.arcs = {{0, 1}, {1, 2}, {2, 0}};
  w.spokes = {{0}, {1}, {2}};
  y.add_wheel(w);
  CHECK(y.size2() == 3);
  CHECK(validate_packing(inst, o, y).ok);
  CHECK(y.edge_weight2(0, 1) == 1);
  CHECK(y.vertex_weight2(0) == 2);
}

TEST_CASE("validation catches broken packings") {
  Instance inst = fixtures::conflict_path();
  NaiveOracle o;
  {
    BasicPacking y;
    y.add_path({0, 1, 2});  // endpoint 2 carries no assignment
    CHECK_FALSE(validate_packing(inst, o, y).ok);
  }
  {
    BasicPacking y;
    y.add_path({0, 1, 2, 3});
    CHECK_THROWS_AS(y.add_path({3, 2, 1, 0}), InternalError);  // overlap
  }
  {
    Instance tri = wheel3_instance();
    BasicPacking y;
    Wheel w = wheel3();
    w.spokes[1] = {4, 1};
    std::swap(w.spokes[0], w.spokes[0]);
    y.add_wheel(w);
    CHECK(validate_packing(tri, o, y).ok);
    Wheel bad = wheel3();
    bad.arcs = {{0, 1}, {1, 2}};
    bad.spokes = {{3, 0}, {4, 1}};
    BasicPacking y2;
    CHECK_THROWS_AS(y2.add_wheel(bad), InternalError);  // even degree
  }
}

TEST_CASE("dump format") {
  BasicPacking y;
  y.add_path({0, 1, 2, 3});
  std::string s = dump_packing(y);
  CHECK(s == "path 0 1 2 3\n");
}
