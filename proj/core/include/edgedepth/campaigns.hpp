#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "edgedepth/formulas.hpp"
#include "edgedepth/graph.hpp"
#include "edgedepth/homology.hpp"
#include "edgedepth/kimura.hpp"
#include "edgedepth/monomial.hpp"

namespace edgedepth {

/// All campaign randomness flows from one 64-bit seed through mt19937_64
/// (bit-exact across platforms); bounded draws use rejection sampling since
/// std::uniform_int_distribution is not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// uniform in [0, n)
  int below(int n);
  /// uniform in [lo, hi]
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  double unit();

 private:
  std::mt19937_64 eng_;
};

// ------------------------------------------------------------ instances

/// Uniform labeled tree on n vertices x1..xn via a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);
/// Decodes an explicit Prüfer sequence (values in [0, n)).
Graph tree_from_prufer(const std::vector<int>& seq, int n);
/// Every labeled tree on n vertices (n^(n-2) of them), Prüfer order.
std::vector<Graph> all_labeled_trees(int n);
/// One representative per isomorphism class, sorted by canonical form.
std::vector<Graph> tree_isomorphism_classes(int n);

/// Random forest on x1..xn with at least one edge.
Graph random_forest(int n, Rng& rng);
/// Seeded connected weakly chordal graph on 2..max_n vertices.
Graph random_connected_weakly_chordal(int max_n, Rng& rng);

/// Random proper nonzero monomial ideal: <= max_vars variables,
/// <= max_gens generators, exponents <= max_exp.
MonomialIdeal random_monomial_ideal(int max_vars, int max_gens, int max_exp, Rng& rng);
/// Random non-unit monomial outside i (exponents <= max_exp); nullopt when
/// the bounded monomial box outside i is (effectively) empty.
std::optional<Monomial> random_monomial_outside(const MonomialIdeal& i, int max_exp, Rng& rng);

struct GenerateParams {
  std::string kind;  // tree | cm-tree | whisker | bm | two-drop
  int n = 6;         // tree / whisker vertex count
  int d = 3;         // cm-tree / bm / two-drop dimension
  int j = 1;         // bm
  int a = 2;         // two-drop
  std::uint64_t seed = 0;
};
Graph generate_instance(const GenerateParams& p);

// ------------------------------------------------------------- campaigns

enum class CampaignKind { cm_tree, bm, two_drop, kimura, lemmas, dstab };
const char* campaign_name(CampaignKind k);
CampaignKind campaign_from_name(const std::string& name);
bool campaign_needs_seed(CampaignKind k);

struct CampaignSpec {
  CampaignKind kind = CampaignKind::cm_tree;
  int max_d = 4;      // cm-tree / bm dimension bound for the full phase
  int max_power = 0;  // 0 = campaign default (d+1 for cm-tree, 3 for bm)
  int max_n = 8;      // kimura / dstab vertex bound
  int samples = 200;  // randomized case count
  bool with_d5 = true;    // cm-tree d=5 sample phase / bm d=5 s=2 phase
  int squeeze_max_d = 8;  // cm-tree bound-squeeze phase; 0 disables
  std::uint64_t seed = 0;
  int field_char = 2;
  int workers = 1;
  DepthOptions depth_opts;
};

struct CaseRecord {
  std::string key;  // canonical instance key; records are sorted by it
  std::string description;
  std::optional<int> formula;
  std::optional<int> oracle;
  bool pass = false;
  std::string detail;
  std::string repro;  // self-contained reproduction command line
};

struct CampaignReport {
  CampaignSpec spec;
  std::vector<CaseRecord> cases;
  int pass_count = 0;
  int fail_count = 0;
  double wall_seconds = 0.0;
  bool passed() const { return fail_count == 0 && !cases.empty(); }
};

/// Rejects infeasible caps up front; cases run concurrently up to
/// spec.workers; the report is deterministic for a fixed spec.
CampaignReport run_campaign(const CampaignSpec& spec);

/// Versioned JSON ("schema":"1").  Timing is omitted so reports are
/// bit-identical across runs with the same seed and configuration.
std::string report_to_json_string(const CampaignReport& r);
std::string report_summary(const CampaignReport& r);

}  // namespace edgedepth
