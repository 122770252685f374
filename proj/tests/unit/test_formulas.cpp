#include <algorithm>
#include <bit>

#include "doctest.h"
#include "edgedepth/campaigns.hpp"
#include "edgedepth/formulas.hpp"
#include "support/oracles.hpp"

using namespace edgedepth;

namespace {

Graph path(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    e.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  return Graph::build(v, e);
}

Graph star(int leaves) {
  std::vector<std::string> v{"x1"};
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 2; i <= leaves + 1; ++i) {
    v.push_back("x" + std::to_string(i));
    e.emplace_back("x1", "x" + std::to_string(i));
  }
  return Graph::build(v, e);
}

const FieldSpec GF2{2};

bool has_edge(const Graph& g, int xi, int yi) {
  return g.has_edge("x" + std::to_string(xi), "y" + std::to_string(yi));
}

}  // namespace

TEST_CASE("cm_tree_depth_power") {
  CHECK(cm_tree_depth_power({5, 3}) == 3);
  CHECK(cm_tree_depth_power({3, 7}) == 1);
  CHECK(cm_tree_depth_power({1, 1}) == 1);
}

TEST_CASE("cm_tree_upper") {
  CHECK(cm_tree_upper(6, 2) == 4);
  CHECK(cm_tree_upper(5, 3) == 2);
  CHECK_THROWS_AS(cm_tree_upper(4, 3), error);
}

TEST_CASE("upper_bound_completion") {
  // single edge: off side is empty on 0 vertices, bound 1
  Graph p2 = path(2);
  BoundCertificate c = upper_bound_completion(p2, EdgeSet{{Edge("x1", "x2")}}, GF2);
  CHECK(c.value == 1);
  CHECK(c.kind == BoundCertificate::Kind::upper);
  CHECK(c.checked_connected);
  CHECK(c.checked_on_bipartite);
  CHECK(c.checked_off_weakly_chordal);

  // CM tree of dimension 4 with a connected 2-edge base subtree: bound d-t = 2
  Graph base = path(4);
  Graph g = whisker_all(base);
  EdgeSet sub{{Edge("x1", "x2"), Edge("x2", "x3")}};
  BoundCertificate up = upper_bound_completion(g, sub, GF2, InnerDepthMode::cm_structural);
  CHECK(up.value == 2);
  BoundCertificate up_oracle = upper_bound_completion(g, sub, GF2, InnerDepthMode::oracle);
  CHECK(up_oracle.value == 2);

  // BM family: e = {x1 y_j .. x1 y_{j+s-2}} gives d-j-s+3
  {
    int d = 5, j = 2, s = 3;
    Graph bm = bm_graph(d, j);
    EdgeSet e;
    for (int k = j; k <= j + s - 2; ++k) e.edges.emplace_back("x1", "y" + std::to_string(k));
    BoundCertificate b = upper_bound_completion(bm, e, GF2);
    CHECK(b.value == d - j - s + 3);
  }

  // hypothesis violations name the failed hypothesis
  CHECK_THROWS_WITH_AS(
      upper_bound_completion(path(5), EdgeSet{{Edge("x1", "x2"), Edge("x4", "x5")}}, GF2),
      doctest::Contains("not connected"), error);
  {
    // an edge deep inside a long cycle leaves an induced C5 on the off side
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 1; i <= 8; ++i) v.push_back("c" + std::to_string(i));
    for (int i = 1; i < 8; ++i)
      e.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    e.emplace_back("c8", "c1");
    v.push_back("a");
    v.push_back("b");
    e.emplace_back("a", "b");
    Graph g8 = Graph::build(v, e);
    CHECK_THROWS_WITH_AS(upper_bound_completion(g8, EdgeSet{{Edge("a", "b")}}, GF2),
                         doctest::Contains("weakly chordal"), error);
  }
}

TEST_CASE("whisker_lower_bound") {
  Graph p3 = path(3);
  CHECK(whisker_lower_bound(p3, VertexSet{p3.vertices()}, 2).value == 2);
  CHECK(whisker_lower_bound(p3, VertexSet{}, 1).value == 1);
  Graph p2 = path(2);
  BoundCertificate c = whisker_lower_bound(p2, VertexSet{p2.vertices()}, 1);
  CHECK(c.value == 2);
  CHECK(c.kind == BoundCertificate::Kind::lower);
  Graph c4 = parse_graph("a b\nb c\nc d\nd a\n");
  CHECK_THROWS_AS(whisker_lower_bound(c4, VertexSet{}, 1), error);
}

TEST_CASE("squeeze arithmetic: the two certificates meet") {
  for (int d = 4; d <= 10; ++d)
    for (int t = 2; t <= d - 2; ++t)
      CHECK(cm_tree_upper(d, t) == std::max(d - (t + 1) + 1, 1));
}

TEST_CASE("bm_graph") {
  Graph g21 = bm_graph(2, 1);
  CHECK(g21.edge_count() == 3);
  CHECK(has_edge(g21, 1, 1));
  CHECK(has_edge(g21, 2, 2));
  CHECK(has_edge(g21, 1, 2));

  CHECK(bm_graph(1, 1).edge_count() == 1);

  Graph g33 = bm_graph(3, 3);
  CHECK(g33.edge_count() == 6);
  for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3}})
    CHECK(has_edge(g33, a, b));

  CHECK_THROWS_AS(bm_graph(3, 4), error);
  CHECK_THROWS_AS(bm_graph(3, 0), error);
}

TEST_CASE("bm_depth") {
  CHECK(bm_depth({6, 2, 3}).value == 4);
  CHECK(bm_depth({4, 4, 2}).value == 1);
  CHECK(bm_depth({5, 1, 2}).value == 5);
  BmDepth base = bm_depth({4, 2, 1});
  CHECK(base.value == 4);
  CHECK(base.provenance == "cm-baseline");
  CHECK(bm_depth({6, 2, 3}).provenance == "theorem");
}

TEST_CASE("two_drop_graph") {
  Graph g52 = two_drop_graph(5, 2);
  for (int l = 1; l <= 5; ++l) CHECK(has_edge(g52, 1, l));
  CHECK(has_edge(g52, 2, 2));
  for (int i = 3; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) CHECK(has_edge(g52, i, j));
  CHECK(g52.edge_count() == 12);

  CHECK_THROWS_AS(two_drop_graph(4, 2), error);
  CHECK_THROWS_AS(two_drop_graph(5, 1), error);
  CHECK_THROWS_AS(two_drop_graph(5, 5), error);

  // structurally connected and bipartite for every valid (d, a)
  for (int d = 5; d <= 8; ++d)
    for (int a = 2; a <= d - 1; ++a) {
      Graph g = two_drop_graph(d, a);
      CHECK(connected_components(g).size() == 1);
      auto bip = is_bipartite(g);
      REQUIRE(bip.has_value());
      for (const auto& v : bip->left.labels) CHECK(v[0] == bip->left.labels[0][0]);
    }
}

TEST_CASE("two_drop_depth") {
  CHECK(two_drop_depth({7, 3, 2}) == 3);
  CHECK(two_drop_depth({7, 3, 5}) == 1);
  CHECK(two_drop_depth({5, 2, 1}) == 5);
}

TEST_CASE("drop anatomy: two drops larger than one") {
  for (int d = 5; d <= 10; ++d)
    for (int a = 2; a <= d - 1; ++a) {
      int mid = std::min(a, d - a + 1);
      if (mid <= d - 2 && mid >= 3) {
        CHECK(two_drop_depth({d, a, 1}) - two_drop_depth({d, a, 2}) > 1);
        CHECK(two_drop_depth({d, a, 2}) - two_drop_depth({d, a, 3}) > 1);
      }
    }
}

TEST_CASE("bm and two-drop edge ideals are unmixed of height d") {
  auto check_unmixed = [](const Graph& g, int d) {
    auto covers = test_oracles::brute_minimal_vertex_covers(g);
    REQUIRE(!covers.empty());
    for (std::uint64_t c : covers) CHECK(std::popcount(c) == d);
  };
  for (int d = 1; d <= 6; ++d)
    for (int j = 1; j <= d; ++j) check_unmixed(bm_graph(d, j), d);
  for (int d = 5; d <= 6; ++d)
    for (int a = 2; a <= d - 1; ++a) check_unmixed(two_drop_graph(d, a), d);
}

TEST_CASE("dstab_tree") {
  CHECK(dstab_tree(path(4)) == 2);
  CHECK(dstab_tree(star(4)) == 1);
  CHECK(dstab_tree(path(6)) == 4);
  Graph c4 = parse_graph("a b\nb c\nc d\nd a\n");
  CHECK_THROWS_AS(dstab_tree(c4), error);
}
