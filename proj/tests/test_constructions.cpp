#include <doctest.h>

#include <set>

#include <curv/constructions.hpp>
#include <curv/patterns.hpp>

using curv::complete_bipartite_graph;
using curv::complete_graph;
using curv::complete_minus_matching;
using curv::cycle_graph;
using curv::evaluate_witness;
using curv::Graph;
using curv::lly_edge;
using curv::path_graph;
using curv::preset_c4;
using curv::preset_k2t;
using curv::Rational;
using curv::sharpness_graph;
using curv::sharpness_upper_bound;
using curv::sharpness_witness;
using curv::SharpnessGraph;
using curv::SharpnessParams;

TEST_SUITE("constructions") {

TEST_CASE("five-block generator degenerate and small cases") {
  // (1,1,1,0): n=5 and exactly the six edges xy, xA, xB, AB, yC, BC.
  SharpnessGraph sg = sharpness_graph({1, 1, 1, 0});
  CHECK(sg.graph.vertex_count() == 5);
  std::set<std::pair<int, int>> expect{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {3, 4}};
  auto edges = sg.graph.edges();
  CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expect);

  // All blocks empty: K_2.
  SharpnessGraph k2 = sharpness_graph({0, 0, 0, 0});
  CHECK(k2.graph.vertex_count() == 2);
  CHECK(k2.graph.edge_count() == 1);

  CHECK_THROWS_AS(sharpness_graph({-1, 0, 0, 0}), curv::InputError);
}

TEST_CASE("block structure and degrees") {
  SharpnessParams p{2, 3, 2, 2};
  SharpnessGraph sg = sharpness_graph(p);
  const Graph& g = sg.graph;
  CHECK(g.vertex_count() == p.vertex_count());
  CHECK(g.degree(sg.x) == 1 + p.a + p.b);
  CHECK(g.degree(sg.y) == 1 + p.c);

  auto in = [](std::pair<int, int> r, int v) { return v >= r.first && v < r.second; };
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in(sg.block_d, v)) {
      CHECK(!g.adjacent(sg.x, v));
      CHECK(!g.adjacent(sg.y, v));
      // D sees all of A, B, C and the rest of D.
      for (int u = sg.block_a.first; u < sg.block_c.second; ++u) CHECK(g.adjacent(v, u));
      for (int u = sg.block_d.first; u < sg.block_d.second; ++u)
        if (u != v) CHECK(g.adjacent(v, u));
    }
    if (in(sg.block_a, v)) {
      CHECK(g.adjacent(sg.x, v));
      CHECK(!g.adjacent(sg.y, v));
      for (int u = sg.block_c.first; u < sg.block_c.second; ++u) CHECK(!g.adjacent(v, u));
    }
    if (in(sg.block_b, v)) {
      CHECK(g.adjacent(sg.x, v));
      for (int u = sg.block_c.first; u < sg.block_c.second; ++u) CHECK(g.adjacent(v, u));
    }
    if (in(sg.block_c, v)) CHECK(g.adjacent(sg.y, v));
  }
  // The edge-neighborhood of xy decomposes into A ∪ B and C.
  auto en = edge_neighborhood(g, sg.x, sg.y);
  CHECK(en.common.empty());
  CHECK(static_cast<int>(en.ax.size()) == p.a + p.b);
  CHECK(static_cast<int>(en.ay.size()) == p.c);
  CHECK(static_cast<int>(en.rest.size()) == p.d);

  // Spec'd instance (2,1,1,0).
  SharpnessGraph sg2 = sharpness_graph({2, 1, 1, 0});
  auto en2 = edge_neighborhood(sg2.graph, sg2.x, sg2.y);
  CHECK(en2.common.empty());
  CHECK(en2.ax.size() == 3);
  CHECK(en2.ay.size() == 1);
}

TEST_CASE("analytic upper bound formula") {
  CHECK(sharpness_upper_bound({2, 1, 1, 0}) == Rational(1, 4));
  CHECK(sharpness_upper_bound({8, 54, 8, 9}) == Rational(0));
  CHECK(sharpness_upper_bound({0, 0, 0, 0}) == Rational(3, 2));
  // kappa(K_2) = 2 dominates the degenerate bound's claim... the bound only
  // upper-bounds kappa when it is realized by the witness; check both sides.
  SharpnessGraph k2 = sharpness_graph({0, 0, 0, 0});
  CHECK(lly_edge(k2.graph, k2.x, k2.y).kappa == Rational(2));
}

TEST_CASE("staircase witness is feasible and achieves the bound") {
  for (SharpnessParams p : std::initializer_list<SharpnessParams>{
           {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
           {1, 1, 1, 0}, {2, 1, 1, 0}, {3, 0, 2, 0}, {2, 0, 2, 3}, {2, 3, 2, 2},
           {5, 2, 1, 0}, {8, 4, 8, 9}}) {
    CAPTURE(p.a);
    CAPTURE(p.b);
    CAPTURE(p.c);
    CAPTURE(p.d);
    SharpnessGraph sg = sharpness_graph(p);
    Rational value = evaluate_witness(sg.graph, sharpness_witness(sg));
    REQUIRE(value == sharpness_upper_bound(p));
    // Any feasible witness upper-bounds the curvature.
    REQUIRE(lly_edge(sg.graph, sg.x, sg.y).kappa <= value);
  }
}

TEST_CASE("preset for the 4-cycle family") {
  SharpnessParams p10 = preset_c4(10);
  CHECK(p10.a == 5);
  CHECK(p10.b == 2);
  CHECK(p10.c == 1);
  CHECK(p10.d == 0);
  CHECK(p10.vertex_count() == 10);
  CHECK(sharpness_upper_bound(p10) == Rational(0));

  CHECK(sharpness_upper_bound(preset_c4(12)) == Rational(0));
  CHECK(sharpness_upper_bound(preset_c4(9)) == Rational(-1, 14));
  CHECK(preset_c4(8).vertex_count() == 8);
  CHECK_THROWS_AS(preset_c4(7), curv::InputError);

  // Desk-scale structural claim at n=10: the complement has 4-cycles and
  // no cycles of any other length.
  Graph comp = sharpness_graph(p10).graph.complement();
  CHECK(curv::contains_cycle_of_length(comp, 4).has_value());
  for (int k = 3; k <= comp.vertex_count(); ++k) {
    if (k == 4) continue;
    CHECK(!curv::contains_cycle_of_length(comp, k).has_value());
  }
}

TEST_CASE("preset for the K_2t family") {
  SharpnessParams p = preset_k2t(10, 81);
  CHECK(p.a == 8);
  CHECK(p.b == 54);
  CHECK(p.c == 8);
  CHECK(p.d == 9);
  CHECK(p.vertex_count() == 81);
  CHECK(sharpness_upper_bound(p) == Rational(0));

  CHECK(sharpness_upper_bound(preset_k2t(10, 80)) == Rational(-1, 558));
  CHECK(sharpness_upper_bound(preset_k2t(10, 82)) == Rational(1, 576));

  CHECK_THROWS_AS(preset_k2t(2, 30), curv::InputError);
  CHECK_THROWS_AS(preset_k2t(10, 27), curv::InputError);

  // Complement K_{2,t}-freeness at desk scale.
  for (auto [t, n] : std::initializer_list<std::pair<int, int>>{{3, 9}, {3, 12}, {4, 12}}) {
    Graph comp = sharpness_graph(preset_k2t(t, n)).graph.complement();
    CAPTURE(t);
    CAPTURE(n);
    CHECK(!curv::contains_k2t(comp, t).has_value());
  }
}

TEST_CASE("standard families") {
  Graph p4 = path_graph(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.hop(0, 3) == 3);

  Graph c5 = cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);

  Graph k5mm = complete_minus_matching(5, 2);
  CHECK(k5mm.edge_count() == 8);
  int min_deg = 5;
  for (int v = 0; v < 5; ++v) min_deg = std::min(min_deg, k5mm.degree(v));
  CHECK(min_deg == 3);
  CHECK(curv::complement_is_matching(k5mm));

  CHECK_THROWS_AS(path_graph(0), curv::InputError);
  CHECK_THROWS_AS(cycle_graph(2), curv::InputError);
  CHECK_THROWS_AS(complete_minus_matching(5, 3), curv::InputError);

  // Dispatcher.
  CHECK(curv::standard_family("path", std::vector<int>{4}).edge_count() == 3);
  CHECK(curv::standard_family("cycle", std::vector<int>{5}).edge_count() == 5);
  CHECK(curv::standard_family("complete", std::vector<int>{4}).edge_count() == 6);
  CHECK(curv::standard_family("complete-bipartite", std::vector<int>{2, 3}).edge_count() == 6);
  CHECK(curv::standard_family("complete-minus-matching", std::vector<int>{5, 2}).edge_count() == 8);
  CHECK_THROWS_AS(curv::standard_family("petersen", std::vector<int>{}), curv::InputError);
  CHECK_THROWS_AS(curv::standard_family("path", std::vector<int>{1, 2}), curv::InputError);
}

}  // TEST_SUITE
