#include <algorithm>
#include <array>

#include "doctest.h"
#include "edgedepth/campaigns.hpp"
#include "edgedepth/homology.hpp"

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

MonomialIdeal maximal_ideal(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  VariableContext c(names);
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(c, i));
  return MonomialIdeal::make(c, std::move(gens));
}

const FieldSpec GF2{2};
const FieldSpec GF3{3};

}  // namespace

TEST_CASE("stanley_reisner") {
  VariableContext c3({"x1", "x2", "x3"});
  SimplicialComplex full = stanley_reisner(MonomialIdeal::zero(c3));
  REQUIRE(full.facets().size() == 1);
  CHECK(full.facets()[0] == 0b111u);
  CHECK(full.dimension() == 2);

  VariableContext c2({"x1", "x2"});
  MonomialIdeal one_edge =
      MonomialIdeal::make(c2, {Monomial::make(c2, {1, 1})});
  SimplicialComplex pts = stanley_reisner(one_edge);
  CHECK(pts.facets() == std::vector<std::uint32_t>{0b01u, 0b10u});

  SimplicialComplex irr = stanley_reisner(maximal_ideal(3));
  CHECK(irr.facets() == std::vector<std::uint32_t>{0u});
  CHECK(irr.dimension() == -1);

  VariableContext c1({"x1"});
  CHECK_THROWS_AS(stanley_reisner(MonomialIdeal::make(c1, {Monomial::make(c1, {2})})), error);
  CHECK_THROWS_AS(stanley_reisner(MonomialIdeal::unit(c1)), error);
}

TEST_CASE("reduced_homology_ranks") {
  // hollow triangle: a circle
  SimplicialComplex circle =
      SimplicialComplex::from_facets({"a", "b", "c"}, {0b011u, 0b101u, 0b110u});
  auto h = reduced_homology_ranks(circle, GF2);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == 0);  // H~_{-1}
  CHECK(h[1] == 0);  // H~_0
  CHECK(h[2] == 1);  // H~_1
  CHECK(reduced_homology_ranks(circle, GF3) == h);

  SimplicialComplex simplex = SimplicialComplex::from_facets({"a", "b", "c"}, {0b111u});
  for (int r : reduced_homology_ranks(simplex, GF2)) CHECK(r == 0);

  SimplicialComplex irrelevant = SimplicialComplex::from_facets({"a"}, {0u});
  auto hi = reduced_homology_ranks(irrelevant, GF2);
  REQUIRE(hi.size() == 1);
  CHECK(hi[0] == 1);

  CHECK(reduced_homology_ranks(SimplicialComplex::void_complex({"a"}), GF2).empty());

  // two points: H~_0 = 1
  SimplicialComplex two = SimplicialComplex::from_facets({"a", "b"}, {0b01u, 0b10u});
  auto h2 = reduced_homology_ranks(two, GF2);
  CHECK(h2[1] == 1);

  CHECK_THROWS_AS(reduced_homology_ranks(two, FieldSpec{4}), error);
}

TEST_CASE("pd_squarefree") {
  CHECK(pd_squarefree(maximal_ideal(1), GF2) == 1);
  CHECK(pd_squarefree(maximal_ideal(4), GF2) == 4);
  CHECK(pd_squarefree(maximal_ideal(5), GF3) == 5);

  VariableContext c2({"x1", "x2"});
  CHECK(pd_squarefree(MonomialIdeal::make(c2, {Monomial::make(c2, {1, 1})}), GF2) == 1);

  CHECK(pd_squarefree(edge_ideal(path(4)), GF2) == 2);

  CHECK_THROWS_AS(pd_squarefree(MonomialIdeal::unit(c2), GF2), error);
  VariableContext c1({"x1"});
  CHECK_THROWS_AS(pd_squarefree(MonomialIdeal::make(c1, {Monomial::make(c1, {2})}), GF2), error);
}

TEST_CASE("lcm-lattice restriction is sound against full subsets") {
  Rng rng(101);
  PdOptions full;
  full.full_subsets = true;
  int done = 0;
  while (done < 120) {
    MonomialIdeal i = random_monomial_ideal(6, 6, 1, rng);
    if (i.is_unit()) continue;
    CHECK(pd_squarefree(i, GF2) == pd_squarefree(i, GF2, full));
    ++done;
  }
}

TEST_CASE("pd_koszul agrees with the polarized literal route") {
  Rng rng(103);
  for (int k = 0; k < 150; ++k) {
    MonomialIdeal i = random_monomial_ideal(5, 5, 3, rng);
    PolarizedIdeal p = polarize(i);
    PdOptions po;
    po.ground_cap = 24;
    CHECK(pd_koszul(i, GF2) == pd_squarefree(p.ideal, GF2, po));
  }
  // and at odd characteristic
  Rng rng3(107);
  for (int k = 0; k < 40; ++k) {
    MonomialIdeal i = random_monomial_ideal(4, 4, 2, rng3);
    CHECK(pd_koszul(i, GF3) == pd_squarefree(polarize(i).ideal, GF3));
  }
}

TEST_CASE("depth") {
  VariableContext c3({"a", "b", "c"});
  DepthResult zero = depth(MonomialIdeal::zero(c3), GF2);
  CHECK(zero.depth == 3);
  CHECK(zero.pd == 0);

  DepthResult m = depth(maximal_ideal(4), GF2);
  CHECK(m.depth == 0);
  CHECK(m.pd == 4);

  DepthResult st = depth(edge_ideal(star(3)), GF2);
  CHECK(st.depth == 1);
  CHECK(st.pd == 3);

  CHECK_THROWS_AS(depth(MonomialIdeal::unit(c3), GF2), error);

  // Auslander-Buchsbaum holds on random samples, and the method tag is set
  Rng rng(109);
  for (int k = 0; k < 60; ++k) {
    MonomialIdeal i = random_monomial_ideal(6, 6, 2, rng);
    DepthResult r = depth(i, GF2);
    CHECK(r.depth + r.pd == r.ambient_n);
    CHECK(r.depth >= 0);
    CHECK(r.depth <= r.ambient_n);
    CHECK(r.method == "hochster");
  }
}

TEST_CASE("depth routes agree across the literal cap") {
  // force the same ideal through both routes by moving the cap
  Rng rng(113);
  for (int k = 0; k < 25; ++k) {
    MonomialIdeal i = random_monomial_ideal(5, 5, 2, rng);
    DepthOptions literal;
    literal.literal_cap = 24;
    DepthOptions koszul;
    koszul.literal_cap = 0;
    CHECK(depth(i, GF2, literal).depth == depth(i, GF2, koszul).depth);
  }
}

TEST_CASE("depth_result_json shape") {
  DepthResult r = depth(edge_ideal(path(4)), GF2);
  std::string j = depth_result_json(r, 1);
  CHECK(j.find("\"depth\":2") != std::string::npos);
  CHECK(j.find("\"pd\":2") != std::string::npos);
  CHECK(j.find("\"n\":4") != std::string::npos);
  CHECK(j.find("\"char\":2") != std::string::npos);
  CHECK(j.find("\"method\":\"hochster\"") != std::string::npos);
  CHECK(j.find("\"t\":1") != std::string::npos);
}

TEST_CASE("depth_profile") {
  DepthProfile p4 = depth_profile(path(4), 3, GF2);
  REQUIRE(p4.steps.size() == 3);
  CHECK(p4.steps[0].second.depth == 2);
  CHECK(p4.steps[1].second.depth == 1);
  CHECK(p4.steps[2].second.depth == 1);
  REQUIRE(p4.stabilization.has_value());
  CHECK(*p4.stabilization == 2);
  CHECK(p4.confirmed);  // tree cross-check: n - eps0 = 4 - 2 = 2

  DepthProfile edge = depth_profile(path(2), 3, GF2);
  REQUIRE(edge.steps.size() == 3);
  for (const auto& [t, r] : edge.steps) CHECK(r.depth == 1);
  CHECK(*edge.stabilization == 1);
  CHECK(!edge.confirmed);  // n - eps0 = 0 misses the true index 1

  // whisker(P3): Cohen-Macaulay tree of dimension 3
  Graph w = whisker_all(path(3));
  DepthProfile wp = depth_profile(w, 4, GF2);
  REQUIRE(wp.steps.size() == 4);
  CHECK(wp.steps[0].second.depth == 3);
  CHECK(wp.steps[1].second.depth == 2);
  CHECK(wp.steps[2].second.depth == 1);
  CHECK(wp.steps[3].second.depth == 1);
  CHECK(*wp.stabilization == 3);
  CHECK(wp.confirmed);  // n - eps0 = 6 - 3 = 3

  // C5 is not a tree: no cross-check claim
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= 5; ++i) v.push_back("c" + std::to_string(i));
  for (int i = 1; i < 5; ++i)
    e.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  e.emplace_back("c5", "c1");
  DepthProfile c5 = depth_profile(Graph::build(v, e), 2, GF2);
  CHECK(!c5.confirmed);
  CHECK(c5.steps[0].second.depth == 2);
}

TEST_CASE("characteristic-independent examples") {
  for (const Graph& g : {path(4), star(3), whisker_all(path(3))}) {
    for (int t = 1; t <= 2; ++t) {
      MonomialIdeal it = power(edge_ideal(g), t);
      CHECK(depth(it, GF2).depth == depth(it, GF3).depth);
    }
  }
}

TEST_CASE("projective plane: the classical characteristic-dependent specimen") {
  // minimal 6-vertex triangulation; its Stanley-Reisner quotient has depth 3
  // away from characteristic 2 but depth 2 over GF(2)
  const std::vector<std::array<int, 3>> facet_triples = {
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
      {1, 2, 4}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}, {2, 3, 5}};
  std::vector<std::uint32_t> facets;
  for (const auto& t : facet_triples)
    facets.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));

  std::vector<std::string> names;
  for (int i = 1; i <= 6; ++i) names.push_back("v" + std::to_string(i));
  SimplicialComplex rp2 = SimplicialComplex::from_facets(names, facets);
  CHECK(rp2.facets().size() == 10);

  auto h2 = reduced_homology_ranks(rp2, GF2);
  REQUIRE(h2.size() == 4);
  CHECK(h2[2] == 1);  // H~_1(RP^2; GF(2)) = 1
  CHECK(h2[3] == 1);  // H~_2(RP^2; GF(2)) = 1
  auto h3 = reduced_homology_ranks(rp2, GF3);
  CHECK(h3[2] == 0);
  CHECK(h3[3] == 0);

  // the Stanley-Reisner ideal: all triples that are not faces
  VariableContext ctx(names);
  std::vector<Monomial> gens;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        std::uint32_t m = (1u << a) | (1u << b) | (1u << c);
        if (!rp2.is_face(m)) {
          std::vector<std::uint8_t> e(6, 0);
          e[static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(b)] =
              e[static_cast<std::size_t>(c)] = 1;
          gens.push_back(Monomial::make(ctx, std::move(e)));
        }
      }
  MonomialIdeal irp2 = MonomialIdeal::make(ctx, std::move(gens));
  CHECK(irp2.generator_count() == 10);

  SimplicialComplex back = stanley_reisner(irp2);
  CHECK(back.facets() == rp2.facets());

  CHECK(pd_squarefree(irp2, GF2) == 4);
  CHECK(pd_squarefree(irp2, GF3) == 3);
  CHECK(depth(irp2, GF2).depth == 2);
  CHECK(depth(irp2, GF3).depth == 3);
  CHECK(pd_koszul(irp2, GF2) == 4);
  CHECK(pd_koszul(irp2, GF3) == 3);
}
