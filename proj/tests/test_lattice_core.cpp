#include <doctest.h>

#include <random>

#include "dcl/errors.hpp"
#include "dcl/lattice.hpp"
#include "dcl/verify.hpp"

using namespace dcl;

namespace {

ColoredDigraph square(int a, int b, int c, int d) {
  ColoredDigraph g;
  g.add_vertex({0, 0});
  g.add_vertex({1, 0});
  g.add_vertex({0, 1});
  g.add_vertex({1, 1});
  g.add_edge(0, 1, a);
  g.add_edge(0, 2, b);
  g.add_edge(2, 3, c);
  g.add_edge(1, 3, d);
  return g;
}

VertexColoredPoset chain(int n) {
  VertexColoredPoset p;
  for (int i = 0; i < n; ++i) p.color.push_back(1);
  for (int i = 0; i + 1 < n; ++i) p.covers.emplace_back(i, i + 1);
  return p;
}

}  // namespace

TEST_SUITE("lattice-core") {
  TEST_CASE("digraph rejects malformed edges") {
    ColoredDigraph g;
    g.add_vertex({0});
    g.add_vertex({1});
    CHECK_THROWS(g.add_vertex({1}));
    CHECK_THROWS(g.add_edge(0, 0, 1));
    CHECK_THROWS(g.add_edge(0, 1, 0));
    g.add_edge(0, 1, 2);
    CHECK_THROWS(g.add_edge(0, 1, 3));
    CHECK(g.color_between(0, 1) == 2);
    CHECK_FALSE(g.color_between(1, 0).has_value());
    CHECK_THROWS_AS(g.at({7}), InvalidObject);
  }

  TEST_CASE("rank function and bfs") {
    auto g = square(1, 2, 1, 2);
    auto r = rank_function(g);
    CHECK(r == std::vector<int>{0, 1, 1, 2});
    CHECK(bfs_distance(g, 1, 2) == 2);

    ColoredDigraph bad;
    for (int i = 0; i < 3; ++i) bad.add_vertex({i});
    bad.add_edge(0, 1, 1);
    bad.add_edge(1, 2, 1);
    bad.add_edge(0, 2, 1);
    CHECK_THROWS_AS(rank_function(bad), NotRanked);

    ColoredDigraph apart;
    apart.add_vertex({0});
    apart.add_vertex({1});
    CHECK_THROWS_AS(bfs_distance(apart, 0, 1), Unreachable);
  }

  TEST_CASE("diamond coloring and balance") {
    CHECK(is_diamond_colored(square(1, 2, 1, 2)));
    CHECK_FALSE(is_diamond_colored(square(1, 2, 1, 3)));
    CHECK(is_topographically_balanced(square(1, 2, 1, 2)));

    ColoredDigraph vee;
    for (int i = 0; i < 3; ++i) vee.add_vertex({i});
    vee.add_edge(0, 1, 1);
    vee.add_edge(0, 2, 2);
    CHECK_FALSE(is_topographically_balanced(vee));
  }

  TEST_CASE("poset validation and ideals") {
    auto p = chain(3);
    p.covers.emplace_back(0, 2);
    CHECK_THROWS_AS(p.validate(), InvalidObject);

    VertexColoredPoset cyc;
    cyc.color = {1, 1};
    cyc.covers = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(cyc.validate(), InvalidObject);

    CHECK(order_ideals(chain(4)).size() == 5);
    VertexColoredPoset anti;
    anti.color = {1, 2, 3};
    CHECK(order_ideals(anti).size() == 8);
    CHECK_THROWS_AS(order_ideals(anti, 4), CapExceeded);
  }

  TEST_CASE("Birkhoff round trip on random posets") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
      auto P = verify::random_poset(1 + i % 7, 3, 0.35, rng);
      auto L = ideals_lattice(P);
      REQUIRE(L.distributive());
      CHECK(isomorphic(join_irreducibles(L), P));
      CHECK(L.length() == P.size());
      CHECK(is_diamond_colored(L.diagram()));
      // join and meet are union and intersection of ideals
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
          CHECK(L.ideal(L.join(a, b)) == (L.ideal(a) | L.ideal(b)));
          CHECK(L.ideal(L.meet(a, b)) == (L.ideal(a) & L.ideal(b)));
        }
    }
  }

  TEST_CASE("isomorphism respects colors") {
    auto a = chain(2);
    auto b = chain(2);
    CHECK(isomorphic(a, b));
    b.color[1] = 2;
    CHECK_FALSE(isomorphic(a, b));
  }

  TEST_CASE("non-lattices are rejected") {
    ColoredDigraph two_min;
    for (int i = 0; i < 3; ++i) two_min.add_vertex({i});
    two_min.add_edge(0, 2, 1);
    two_min.add_edge(1, 2, 2);
    CHECK_THROWS_AS(DiamondLattice::from_diagram(two_min), StructureViolation);

    // M3 cannot be diamond-colored
    ColoredDigraph m3;
    for (int i = 0; i < 5; ++i) m3.add_vertex({i});
    for (int a = 1; a <= 3; ++a) {
      m3.add_edge(0, a, a);
      m3.add_edge(a, 4, a);
    }
    CHECK_THROWS_AS(DiamondLattice::from_diagram(m3), StructureViolation);
  }

  TEST_CASE("dot output is deterministic") {
    auto g = square(1, 2, 1, 2);
    auto s = g.to_dot("sq");
    CHECK(s == square(1, 2, 1, 2).to_dot("sq"));
    // nodes are numbered in coordinate order, so (1,0) is n2
    CHECK(s.find("n0 -> n2 [label=1];") != std::string::npos);
    CHECK(s.find("n0 -> n1 [label=2];") != std::string::npos);
  }
}
