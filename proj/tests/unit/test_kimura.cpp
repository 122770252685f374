#include "doctest.h"
#include "edgedepth/campaigns.hpp"
#include "edgedepth/homology.hpp"
#include "edgedepth/kimura.hpp"

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

Graph cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    e.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  e.emplace_back("x" + std::to_string(n), "x1");
  return Graph::build(v, e);
}

const FieldSpec GF2{2};

}  // namespace

TEST_CASE("verify_strongly_disjoint") {
  Graph single = path(2);
  StronglyDisjointFamily fam;
  fam.blocks.push_back({VertexSet{{"x1"}}, VertexSet{{"x2"}}});
  fam.certificates.edges.emplace_back("x1", "x2");
  CHECK(verify_strongly_disjoint(single, fam));

  // two blocks sharing a vertex
  Graph p3 = path(3);
  StronglyDisjointFamily shared;
  shared.blocks.push_back({VertexSet{{"x1"}}, VertexSet{{"x2"}}});
  shared.blocks.push_back({VertexSet{{"x2"}}, VertexSet{{"x3"}}});
  shared.certificates.edges.emplace_back("x1", "x2");
  shared.certificates.edges.emplace_back("x2", "x3");
  CHECK(!verify_strongly_disjoint(p3, shared));

  // P4 with both end edges: certificates are not an induced matching
  Graph p4 = path(4);
  StronglyDisjointFamily ends;
  ends.blocks.push_back({VertexSet{{"x1"}}, VertexSet{{"x2"}}});
  ends.blocks.push_back({VertexSet{{"x3"}}, VertexSet{{"x4"}}});
  ends.certificates.edges.emplace_back("x1", "x2");
  ends.certificates.edges.emplace_back("x3", "x4");
  CHECK(!verify_strongly_disjoint(p4, ends));

  // non-complete block
  StronglyDisjointFamily bad;
  bad.blocks.push_back({VertexSet{{"x1", "x3"}}, VertexSet{{"x2", "x4"}}});
  bad.certificates.edges.emplace_back("x1", "x2");
  CHECK(!verify_strongly_disjoint(p4, bad));
}

TEST_CASE("kimura_d examples") {
  CHECK(kimura_d(path(2)).value == 1);
  for (int m = 1; m <= 4; ++m) CHECK(kimura_d(star(m)).value == m);
  CHECK(kimura_d(path(4)).value == 2);

  KimuraResult r = kimura_d(path(4));
  CHECK(verify_strongly_disjoint(path(4), r.witness));

  CHECK_THROWS_AS(kimura_d(Graph::build({"a"}, {})), error);
  CHECK_THROWS_AS(kimura_d(path(16)), infeasible_error);
}

TEST_CASE("kimura_d determinism") {
  Graph g = two_drop_graph(5, 3);
  KimuraResult a = kimura_d(g);
  KimuraResult b = kimura_d(g);
  CHECK(a.value == b.value);
  CHECK(witness_to_json_string(a.witness) == witness_to_json_string(b.witness));
}

TEST_CASE("isolated vertices do not change d(G)") {
  Graph p4 = path(4);
  Graph p4_iso = parse_graph(to_edge_list(p4) + "loner\n");
  CHECK(kimura_d(p4).value == kimura_d(p4_iso).value);
}

TEST_CASE("pd_weakly_chordal") {
  CHECK(pd_weakly_chordal(path(4)) == 2);
  CHECK(pd_weakly_chordal(path(4)) == pd_squarefree(edge_ideal(path(4)), GF2));
  CHECK_THROWS_AS(pd_weakly_chordal(cycle(5)), error);
  CHECK_THROWS_AS(pd_weakly_chordal(Graph::build({"a", "b"}, {}), KimuraOptions{}), error);
}

TEST_CASE("kimura equals the homology oracle on trees and random graphs") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& t : tree_isomorphism_classes(n))
      CHECK(kimura_d(t).value == pd_squarefree(edge_ideal(t), GF2));

  Rng rng(211);
  for (int k = 0; k < 60; ++k) {
    Graph g = random_connected_weakly_chordal(8, rng);
    CHECK(kimura_d(g).value == pd_squarefree(edge_ideal(g), GF2));
  }
}

TEST_CASE("witness JSON shape") {
  KimuraResult r = kimura_d(star(2));
  std::string j = witness_to_json_string(r.witness);
  CHECK(j.find("\"A\"") != std::string::npos);
  CHECK(j.find("\"B\"") != std::string::npos);
  CHECK(j.find("\"cert\"") != std::string::npos);
}
