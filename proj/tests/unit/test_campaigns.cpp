#include <algorithm>

#include "doctest.h"
#include "edgedepth/campaigns.hpp"

using namespace edgedepth;

TEST_CASE("prufer trees") {
  CHECK(tree_from_prufer({}, 2).edge_count() == 1);
  Graph t = tree_from_prufer({0, 0}, 4);  // x1 is the centre of a star
  CHECK(is_tree(t));
  CHECK(t.degree(0) == 3);
  CHECK(all_labeled_trees(4).size() == 16);
  CHECK(all_labeled_trees(5).size() == 125);
  CHECK(tree_isomorphism_classes(4).size() == 2);
  CHECK(tree_isomorphism_classes(5).size() == 3);
  CHECK(tree_isomorphism_classes(6).size() == 6);

  Rng rng(5);
  for (int k = 0; k < 25; ++k) CHECK(is_tree(random_tree(rng.range(1, 9), rng)));
}

TEST_CASE("random instances respect their contracts") {
  Rng rng(6);
  for (int k = 0; k < 25; ++k) {
    Graph f = random_forest(rng.range(2, 8), rng);
    CHECK(is_forest(f));
    CHECK(f.edge_count() >= 1);
    Graph w = random_connected_weakly_chordal(8, rng);
    CHECK(connected_components(w).size() == 1);
    CHECK(is_weakly_chordal(w));
    MonomialIdeal i = random_monomial_ideal(6, 6, 2, rng);
    CHECK(!i.is_zero());
    CHECK(!i.is_unit());
    CHECK(i.context().size() <= 6);
    for (const auto& g : i.generators())
      for (int v = 0; v < i.context().size(); ++v) CHECK(g.exponent(v) <= 2);
  }
}

TEST_CASE("generate_instance") {
  GenerateParams tree;
  tree.kind = "tree";
  tree.n = 6;
  tree.seed = 2;
  Graph t = generate_instance(tree);
  CHECK(is_tree(t));
  CHECK(t.vertex_count() == 6);
  CHECK(to_edge_list(t) == to_edge_list(generate_instance(tree)));  // reproducible

  GenerateParams cm;
  cm.kind = "cm-tree";
  cm.d = 4;
  cm.seed = 1;
  Graph g = generate_instance(cm);
  CHECK(g.vertex_count() == 8);
  CHECK(recognize_cm_tree(g).has_value());

  GenerateParams bm;
  bm.kind = "bm";
  bm.d = 3;
  bm.j = 2;
  CHECK(generate_instance(bm) == bm_graph(3, 2));

  GenerateParams bad;
  bad.kind = "nope";
  CHECK_THROWS_AS(generate_instance(bad), error);
}

TEST_CASE("campaign names") {
  CHECK(campaign_from_name("cm-tree") == CampaignKind::cm_tree);
  CHECK(campaign_from_name("lemmas") == CampaignKind::lemmas);
  CHECK_THROWS_AS(campaign_from_name("nope"), error);
  CHECK(campaign_needs_seed(CampaignKind::kimura));
  CHECK(!campaign_needs_seed(CampaignKind::two_drop));
}

TEST_CASE("cm-tree campaign passes at small scale") {
  CampaignSpec spec;
  spec.kind = CampaignKind::cm_tree;
  spec.max_d = 2;
  spec.with_d5 = false;
  spec.squeeze_max_d = 4;
  spec.workers = 2;
  CampaignReport r = run_campaign(spec);
  CHECK(r.passed());
  CHECK(r.fail_count == 0);
  // d=1: 2 powers; d=2: 3 powers; squeeze d=4: 16 labeled trees
  CHECK(r.cases.size() == 2 + 3 + 16);
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(),
                       [](const CaseRecord& a, const CaseRecord& b) { return a.key < b.key; }));
}

TEST_CASE("bm campaign reports the degenerate j=1 family honestly") {
  CampaignSpec spec;
  spec.kind = CampaignKind::bm;
  spec.max_d = 3;
  spec.max_power = 2;  // s in {1, 2}
  spec.with_d5 = false;
  spec.workers = 2;
  CampaignReport r = run_campaign(spec);
  // G_{2,1} and G_{3,1} at s=2 are whiskered stars: depth follows the
  // CM-tree formula, one under the closed form
  CHECK(r.fail_count == 2);
  for (const auto& rec : r.cases) {
    if (rec.pass) continue;
    CHECK(rec.key.find("/j=1/s=2") != std::string::npos);
    CHECK(!rec.repro.empty());
    CHECK(rec.detail.find("whisker graph of a star") != std::string::npos);
  }
}

TEST_CASE("two-drop campaign passes") {
  CampaignSpec spec;
  spec.kind = CampaignKind::two_drop;
  spec.workers = 4;
  CampaignReport r = run_campaign(spec);
  CHECK(r.passed());
  // 3 oracle pairs + 3 pinned t=3 + 7 square-colon identities
  CHECK(r.cases.size() == 6 + 3 + 7);
}

TEST_CASE("kimura campaign at reduced scale") {
  CampaignSpec spec;
  spec.kind = CampaignKind::kimura;
  spec.max_n = 6;
  spec.samples = 25;
  spec.seed = 99;
  spec.workers = 4;
  CampaignReport r = run_campaign(spec);
  CHECK(r.passed());
}

TEST_CASE("lemmas campaign at reduced scale") {
  CampaignSpec spec;
  spec.kind = CampaignKind::lemmas;
  spec.samples = 40;
  spec.seed = 12345;
  spec.workers = 4;
  CampaignReport r = run_campaign(spec);
  CHECK(r.passed());
  CHECK(r.cases.size() == 6);  // one batch per property at 40 samples
}

TEST_CASE("dstab campaign: P2 is the known degenerate case") {
  CampaignSpec spec;
  spec.kind = CampaignKind::dstab;
  spec.max_n = 4;
  spec.workers = 2;
  CampaignReport r = run_campaign(spec);
  CHECK(r.cases.size() == 4);  // classes: P2, P3, P4, star4
  CHECK(r.fail_count == 1);
  const auto& p2 = r.cases.front();
  CHECK(p2.key == "dstab/n=02/class=00");
  CHECK(!p2.pass);
  CHECK(p2.formula == 0);  // n - eps0 degenerates for the single edge
  CHECK(p2.oracle == 1);   // the sequence is constant from t = 1
}

TEST_CASE("reports are bit-identical for a fixed seed and config") {
  CampaignSpec spec;
  spec.kind = CampaignKind::lemmas;
  spec.samples = 30;
  spec.seed = 777;
  spec.workers = 1;
  std::string a = report_to_json_string(run_campaign(spec));
  spec.workers = 4;
  std::string b = report_to_json_string(run_campaign(spec));
  CHECK(a == b);

  CampaignSpec k;
  k.kind = CampaignKind::kimura;
  k.max_n = 5;
  k.samples = 10;
  k.seed = 31337;
  std::string c = report_to_json_string(run_campaign(k));
  std::string d = report_to_json_string(run_campaign(k));
  CHECK(c == d);
  CHECK(c.find("\"schema\": \"1\"") != std::string::npos);
}

TEST_CASE("infeasible campaign caps are rejected up front") {
  CampaignSpec spec;
  spec.kind = CampaignKind::cm_tree;
  spec.max_d = 9;
  CHECK_THROWS_AS(run_campaign(spec), infeasible_error);
  CampaignSpec k;
  k.kind = CampaignKind::kimura;
  k.max_n = 40;
  CHECK_THROWS_AS(run_campaign(k), infeasible_error);
}
