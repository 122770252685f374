#include "edgedepth/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace edgedepth {

int Rng::below(int n) {
  if (n <= 0) throw error("Rng::below: n must be positive");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % un;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return static_cast<int>(v % un);
}

double Rng::unit() { return (eng_() >> 11) * 0x1.0p-53; }

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// schedule-independent per-case seed
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(seed ^ mix64(stream)) ^ index);
}

std::vector<std::string> x_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string pad(int v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

std::string shell_repro(const Graph& g, const std::string& tail) {
  std::string el = to_edge_list(g);
  std::string escaped;
  for (char c : el) {
    if (c == '\n')
      escaped += "\\n";
    else
      escaped += c;
  }
  return "printf '" + escaped + "' | edgedepth " + tail;
}

}  // namespace

Graph tree_from_prufer(const std::vector<int>& seq, int n) {
  if (n < 1) throw error("tree_from_prufer: n must be >= 1");
  if (static_cast<int>(seq.size()) != std::max(n - 2, 0))
    throw error("tree_from_prufer: sequence length must be n-2");
  auto labels = x_labels(n);
  if (n == 1) return Graph::build(labels, {});
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw error("tree_from_prufer: entry out of range");
    ++deg[static_cast<std::size_t>(s)];
  }
  for (int s : seq) {
    int leaf = -1;
    for (int i = 0; i < n; ++i)
      if (deg[static_cast<std::size_t>(i)] == 1) {
        leaf = i;
        break;
      }
    edges.emplace_back(labels[static_cast<std::size_t>(leaf)], labels[static_cast<std::size_t>(s)]);
    deg[static_cast<std::size_t>(leaf)] = 0;
    --deg[static_cast<std::size_t>(s)];
  }
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (deg[static_cast<std::size_t>(i)] >= 1) rest.push_back(i);
  edges.emplace_back(labels[static_cast<std::size_t>(rest[0])], labels[static_cast<std::size_t>(rest[1])]);
  return Graph::build(labels, edges);
}

Graph random_tree(int n, Rng& rng) {
  std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
  for (auto& s : seq) s = rng.below(n);
  return tree_from_prufer(seq, n);
}

std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  if (n <= 2) {
    out.push_back(tree_from_prufer({}, n));
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    out.push_back(tree_from_prufer(seq, n));
    int k = n - 3;
    while (k >= 0 && seq[static_cast<std::size_t>(k)] == n - 1) {
      seq[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++seq[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Graph> tree_isomorphism_classes(int n) {
  std::map<std::string, Graph> classes;
  if (n <= 2) return all_labeled_trees(n);
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph t = tree_from_prufer(seq, n);
    classes.emplace(tree_canonical_form(t), std::move(t));
    int k = n - 3;
    while (k >= 0 && seq[static_cast<std::size_t>(k)] == n - 1) {
      seq[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++seq[static_cast<std::size_t>(k)];
  }
  std::vector<Graph> out;
  for (auto& [form, g] : classes) out.push_back(std::move(g));
  return out;
}

Graph random_forest(int n, Rng& rng) {
  if (n < 2) throw error("random_forest: need n >= 2");
  while (true) {
    Graph t = random_tree(n, rng);
    std::vector<std::pair<std::string, std::string>> kept;
    for (const auto& e : t.edges())
      if (rng.unit() >= 0.2) kept.emplace_back(e.u, e.v);
    if (kept.empty()) continue;
    return Graph::build(t.vertices(), kept);
  }
}

Graph random_connected_weakly_chordal(int max_n, Rng& rng) {
  if (max_n < 2) throw error("random_connected_weakly_chordal: need max_n >= 2");
  while (true) {
    int n = rng.range(2, max_n);
    double p = 0.25 + 0.5 * rng.unit();
    auto labels = x_labels(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.unit() < p) edges.emplace_back(labels[static_cast<std::size_t>(i)],
                                               labels[static_cast<std::size_t>(j)]);
    if (edges.empty()) continue;
    Graph g = Graph::build(labels, edges);
    if (connected_components(g).size() != 1) continue;
    if (!is_weakly_chordal(g)) continue;
    return g;
  }
}

MonomialIdeal random_monomial_ideal(int max_vars, int max_gens, int max_exp, Rng& rng) {
  while (true) {
    int nv = rng.range(1, max_vars);
    int ng = rng.range(1, max_gens);
    VariableContext ctx(x_labels(nv));
    std::vector<Monomial> gens;
    for (int k = 0; k < ng; ++k) {
      std::vector<std::uint8_t> e(static_cast<std::size_t>(nv));
      int deg = 0;
      for (auto& x : e) {
        x = static_cast<std::uint8_t>(rng.below(max_exp + 1));
        deg += x;
      }
      if (deg == 0) continue;  // skip unit generators
      gens.push_back(Monomial::make(ctx, std::move(e)));
    }
    if (gens.empty()) continue;
    return MonomialIdeal::make(ctx, std::move(gens));
  }
}

std::optional<Monomial> random_monomial_outside(const MonomialIdeal& i, int max_exp, Rng& rng) {
  int nv = i.context().size();
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<std::uint8_t> e(static_cast<std::size_t>(nv));
    int deg = 0;
    for (auto& x : e) {
      x = static_cast<std::uint8_t>(rng.below(max_exp + 1));
      deg += x;
    }
    if (deg == 0) continue;
    Monomial f = Monomial::make(i.context(), std::move(e));
    if (!i.contains(f)) return f;
  }
  return std::nullopt;
}

Graph generate_instance(const GenerateParams& p) {
  Rng rng(p.seed);
  if (p.kind == "tree") return random_tree(p.n, rng);
  if (p.kind == "cm-tree") return whisker_all(random_tree(p.d, rng));
  if (p.kind == "whisker") {
    Graph t = random_tree(p.n, rng);
    VertexSet u;
    while (u.empty())
      for (const auto& v : t.vertices())
        if (rng.unit() < 0.5) u.labels.push_back(v);
    return whisker(t, u);
  }
  if (p.kind == "bm") return bm_graph(p.d, p.j);
  if (p.kind == "two-drop") return two_drop_graph(p.d, p.a);
  throw error("generate_instance: unknown kind '" + p.kind + "'");
}

// ---------------------------------------------------------------- campaigns

const char* campaign_name(CampaignKind k) {
  switch (k) {
    case CampaignKind::cm_tree: return "cm-tree";
    case CampaignKind::bm: return "bm";
    case CampaignKind::two_drop: return "two-drop";
    case CampaignKind::kimura: return "kimura";
    case CampaignKind::lemmas: return "lemmas";
    case CampaignKind::dstab: return "dstab";
  }
  return "?";
}

CampaignKind campaign_from_name(const std::string& name) {
  for (CampaignKind k : {CampaignKind::cm_tree, CampaignKind::bm, CampaignKind::two_drop,
                         CampaignKind::kimura, CampaignKind::lemmas, CampaignKind::dstab})
    if (name == campaign_name(k)) return k;
  throw error("unknown campaign '" + name + "'");
}

bool campaign_needs_seed(CampaignKind k) {
  return k == CampaignKind::kimura || k == CampaignKind::lemmas;
}

namespace {

struct Job {
  CaseRecord record;                       // pre-filled key/description/repro
  std::function<void(CaseRecord&)> run;    // fills formula/oracle/pass/detail
};

void run_jobs(std::vector<Job>& jobs, int workers, std::vector<CaseRecord>& out) {
  out.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      CaseRecord rec = jobs[i].record;
      try {
        jobs[i].run(rec);
      } catch (const std::exception& ex) {
        rec.pass = false;
        rec.detail = std::string("exception: ") + ex.what();
      }
      out[i] = std::move(rec);
    }
  };
  int w = std::max(1, workers);
  if (w == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < w; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
}

Monomial edge_monomial(const VariableContext& ctx, const Edge& e) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(ctx.size()), 0);
  m[static_cast<std::size_t>(ctx.index_of(e.u))] = 1;
  m[static_cast<std::size_t>(ctx.index_of(e.v))] = 1;
  return Monomial::make(ctx, std::move(m));
}

// connected t-edge subsets of a tree's edge set
std::vector<std::vector<Edge>> connected_edge_subsets(const Graph& t, int size) {
  std::vector<Edge> all = t.edges();
  std::vector<std::vector<Edge>> out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == size) {
      EdgeSet es;
      for (int k : pick) es.edges.push_back(all[static_cast<std::size_t>(k)]);
      // connectivity of the picked subgraph
      std::vector<std::pair<int, int>> idx;
      for (const auto& e : es.edges) idx.emplace_back(t.index_of(e.u), t.index_of(e.v));
      std::uint64_t supp = 0;
      for (auto [a, b] : idx) supp |= (1ull << a) | (1ull << b);
      std::uint64_t comp = supp & (~supp + 1);
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto [a, b] : idx) {
          std::uint64_t ab = (1ull << a) | (1ull << b);
          if ((comp & ab) && (comp & ab) != ab) {
            comp |= ab;
            grew = true;
          }
        }
      }
      if (comp == supp) out.push_back(es.edges);
      return;
    }
    for (int k = from; k < static_cast<int>(all.size()); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// ------------------------------------------------------------ cm-tree

void build_cm_tree_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  if (spec.max_d < 1 || spec.max_d > 4)
    throw infeasible_error("cm-tree: the full oracle phase supports 1 <= max-d <= 4 "
                           "(d = 5 runs as the fixed sample phase)");
  if (spec.max_power > 7)
    throw infeasible_error("cm-tree: max-t above 7 exceeds the oracle budget");
  FieldSpec field{spec.field_char};

  for (int d = 1; d <= spec.max_d; ++d) {
    auto trees = all_labeled_trees(d);
    int tmax = spec.max_power == 0 ? d + 1 : std::min(spec.max_power, d + 1);
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
      Graph g = whisker_all(trees[ti]);
      for (int t = 1; t <= tmax; ++t) {
        Job job;
        job.record.key = "cm-tree/oracle/d=" + std::to_string(d) + "/tree=" +
                         pad(static_cast<int>(ti), 4) + "/t=" + std::to_string(t);
        job.record.description = "whisker tree, d=" + std::to_string(d) + ", labeled tree #" +
                                 std::to_string(ti) + ", power " + std::to_string(t);
        job.record.repro = shell_repro(g, "depth - --t " + std::to_string(t) + " --field " +
                                              std::to_string(spec.field_char) + " --check");
        DepthOptions dopts = spec.depth_opts;
        job.run = [g, d, t, field, dopts](CaseRecord& rec) {
          rec.formula = cm_tree_depth_power({d, t});
          rec.oracle = depth(power(edge_ideal(g), t), field, dopts).depth;
          rec.pass = (*rec.formula == *rec.oracle);
        };
        jobs.push_back(std::move(job));
      }
    }
  }

  if (spec.with_d5) {
    auto classes = tree_isomorphism_classes(5);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      Graph g = whisker_all(classes[ci]);
      for (int t = 1; t <= 3; ++t) {
        Job job;
        job.record.key = "cm-tree/sample5/class=" + pad(static_cast<int>(ci), 2) +
                         "/t=" + std::to_string(t);
        job.record.description = "whisker tree, d=5, isomorphism class #" + std::to_string(ci) +
                                 ", power " + std::to_string(t);
        job.record.repro = shell_repro(g, "depth - --t " + std::to_string(t) + " --field " +
                                              std::to_string(spec.field_char) + " --check");
        DepthOptions dopts = spec.depth_opts;
        FieldSpec f2 = field;
        job.run = [g, t, f2, dopts](CaseRecord& rec) {
          rec.formula = cm_tree_depth_power({5, t});
          rec.oracle = depth(power(edge_ideal(g), t), f2, dopts).depth;
          rec.pass = (*rec.formula == *rec.oracle);
        };
        jobs.push_back(std::move(job));
      }
    }
  }

  // bound-squeeze phase: upper_bound_completion (structural inner depth)
  // against whisker_lower_bound, no oracle
  for (int d = 4; d <= spec.squeeze_max_d; ++d) {
    std::vector<Graph> trees = d <= 6 ? all_labeled_trees(d) : tree_isomorphism_classes(d);
    bool classes_only = d > 6;
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
      Graph base = trees[ti];
      Job job;
      job.record.key = "cm-tree/squeeze/d=" + std::to_string(d) + "/" +
                       (classes_only ? "class=" : "tree=") + pad(static_cast<int>(ti), 6);
      job.record.description = "bound squeeze on whisker tree, d=" + std::to_string(d) +
                               (classes_only ? " (isomorphism class)" : " (labeled tree)");
      job.record.repro = "edgedepth verify cm-tree --max-d " + std::to_string(spec.max_d) +
                         " --squeeze-max-d " + std::to_string(spec.squeeze_max_d) + " --seed " +
                         std::to_string(spec.seed);
      FieldSpec f2 = field;
      job.run = [base, d, f2](CaseRecord& rec) {
        Graph g = whisker_all(base);
        VertexSet all_base{base.vertices()};
        int checks = 0;
        for (int t = 2; t <= d - 2; ++t) {
          int expect = d - t;
          for (const auto& sub : connected_edge_subsets(base, t)) {
            EdgeSet es;
            es.edges = sub;
            BoundCertificate up =
                upper_bound_completion(g, es, f2, InnerDepthMode::cm_structural);
            BoundCertificate low = whisker_lower_bound(base, all_base, t + 1);
            if (!(up.checked_connected && up.checked_on_bipartite &&
                  up.checked_off_weakly_chordal))
              throw error("squeeze: hypothesis record incomplete");
            if (up.value != expect || low.value != expect) {
              rec.formula = expect;
              rec.oracle = up.value;
              rec.pass = false;
              rec.detail = "upper " + std::to_string(up.value) + " vs lower " +
                           std::to_string(low.value) + " at t=" + std::to_string(t);
              return;
            }
            ++checks;
          }
        }
        rec.pass = true;
        rec.detail = std::to_string(checks) + " (t, subtree) choices squeezed to d-t";
      };
      jobs.push_back(std::move(job));
    }
  }
}

// ----------------------------------------------------------------- bm

void build_bm_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  if (spec.max_d < 1 || spec.max_d > 4)
    throw infeasible_error("bm: the full phase supports 1 <= max-d <= 4 "
                           "(d = 5 runs as the fixed s = 2 phase)");
  int max_s = spec.max_power == 0 ? 3 : spec.max_power;
  if (max_s > 3) throw infeasible_error("bm: max-s above 3 exceeds the oracle budget");
  FieldSpec field{spec.field_char};

  auto push_case = [&](int d, int j, int s) {
    Graph g = bm_graph(d, j);
    Job job;
    job.record.key = "bm/d=" + std::to_string(d) + "/j=" + std::to_string(j) +
                     "/s=" + std::to_string(s);
    job.record.description = "Banerjee-Mukundan family G_{" + std::to_string(d) + "," +
                             std::to_string(j) + "}, power " + std::to_string(s);
    job.record.repro = shell_repro(g, "depth - --t " + std::to_string(s) + " --field " +
                                          std::to_string(spec.field_char));
    DepthOptions dopts = spec.depth_opts;
    job.run = [g, d, j, s, field, dopts](CaseRecord& rec) {
      BmDepth bd = bm_depth({d, j, s});
      rec.formula = bd.value;
      rec.oracle = depth(power(edge_ideal(g), s), field, dopts).depth;
      rec.pass = (*rec.formula == *rec.oracle);
      if (!rec.pass && j == 1)
        rec.detail = "G_{d,1} is the whisker graph of a star; its powers follow "
                     "the Cohen-Macaulay tree formula max(d-s+1,1), one below the "
                     "closed form (" + bd.provenance + ")";
    };
    jobs.push_back(std::move(job));
  };

  for (int d = 1; d <= spec.max_d; ++d)
    for (int j = 1; j <= d; ++j)
      for (int s = 1; s <= max_s; ++s) push_case(d, j, s);
  if (spec.with_d5)
    for (int j = 1; j <= 5; ++j) push_case(5, j, 2);
}

// ------------------------------------------------------------- two-drop

void build_two_drop_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  FieldSpec field{spec.field_char};
  const int d = 5;

  for (int a = 2; a <= d - 1; ++a) {
    Graph g = two_drop_graph(d, a);
    for (int t = 1; t <= 2; ++t) {
      Job job;
      job.record.key = "two-drop/oracle/d=5/a=" + std::to_string(a) + "/t=" + std::to_string(t);
      job.record.description = "two-drop family G_{5," + std::to_string(a) + "}, power " +
                               std::to_string(t);
      job.record.repro = shell_repro(g, "depth - --t " + std::to_string(t) + " --field " +
                                            std::to_string(spec.field_char));
      DepthOptions dopts = spec.depth_opts;
      job.run = [g, a, t, field, dopts](CaseRecord& rec) {
        rec.formula = two_drop_depth({5, a, t});
        rec.oracle = depth(power(edge_ideal(g), t), field, dopts).depth;
        rec.pass = (*rec.formula == *rec.oracle);
      };
      jobs.push_back(std::move(job));
    }

    // t = 3 pinned by the colon identity: I^3 : (x1 y_a x1 y_d) = I(K_{d,d}),
    // whose quotient has depth 1, plus the bipartite positivity floor
    Job pin;
    pin.record.key = "two-drop/pin3/d=5/a=" + std::to_string(a);
    pin.record.description = "two-drop family G_{5," + std::to_string(a) +
                             "}, power 3 pinned via colon to I(K_{5,5})";
    pin.record.repro = "edgedepth verify two-drop --field " + std::to_string(spec.field_char);
    DepthOptions dopts = spec.depth_opts;
    pin.run = [a, field, dopts](CaseRecord& rec) {
      Graph g = two_drop_graph(5, a);
      MonomialIdeal base = edge_ideal(g);
      const auto& ctx = base.context();
      Monomial m = edge_monomial(ctx, Edge("x1", "y" + std::to_string(a)))
                       .times(edge_monomial(ctx, Edge("x1", "y5")));
      MonomialIdeal lhs = colon(power(base, 3), m);

      std::vector<std::string> verts;
      std::vector<std::pair<std::string, std::string>> kedges;
      for (int i = 1; i <= 5; ++i) verts.push_back("x" + std::to_string(i));
      for (int i = 1; i <= 5; ++i) verts.push_back("y" + std::to_string(i));
      for (int i = 1; i <= 5; ++i)
        for (int l = 1; l <= 5; ++l)
          kedges.emplace_back("x" + std::to_string(i), "y" + std::to_string(l));
      Graph kdd = Graph::build(verts, kedges);
      MonomialIdeal rhs = edge_ideal(kdd);

      bool identity = (lhs == rhs);
      int upper = depth(rhs, field, dopts).depth;  // depth S/I(K_{d,d}) = 1
      rec.formula = two_drop_depth({5, a, 3});
      rec.oracle = identity ? upper : -1;
      rec.pass = identity && upper == 1;
      rec.detail = identity ? "colon identity exact; upper bound 1 meets the bipartite floor"
                            : "colon identity failed";
    };
    jobs.push_back(std::move(pin));
  }

  // Eq-4.3-shaped colon identity for d <= 6, all a
  for (int dd = 5; dd <= 6; ++dd) {
    for (int a = 2; a <= dd - 1; ++a) {
      Job job;
      job.record.key = "two-drop/eq43/d=" + std::to_string(dd) + "/a=" + std::to_string(a);
      job.record.description = "square colon identity for G_{" + std::to_string(dd) + "," +
                               std::to_string(a) + "}";
      job.record.repro = "edgedepth verify two-drop --field " + std::to_string(spec.field_char);
      job.run = [dd, a](CaseRecord& rec) {
        Graph g = two_drop_graph(dd, a);
        MonomialIdeal base = edge_ideal(g);
        const auto& ctx = base.context();
        Monomial m = edge_monomial(ctx, Edge("x1", "y" + std::to_string(dd)));
        MonomialIdeal lhs = colon(power(base, 2), m);
        std::vector<Monomial> extra;
        for (int i = a + 1; i <= dd; ++i)
          for (int l = 1; l <= dd; ++l)
            extra.push_back(edge_monomial(
                ctx, Edge("x" + std::to_string(i), "y" + std::to_string(l))));
        MonomialIdeal rhs = add(base, MonomialIdeal::make(ctx, std::move(extra)));
        rec.pass = (lhs == rhs);
        rec.detail = rec.pass ? "exact ideal equality" : "ideals differ";
      };
      jobs.push_back(std::move(job));
    }
  }
}

// -------------------------------------------------------------- kimura

void build_kimura_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  if (spec.max_n < 2 || spec.max_n > 12)
    throw infeasible_error("kimura: max-n must be in [2, 12]");
  FieldSpec field{spec.field_char};

  for (int n = 2; n <= spec.max_n; ++n) {
    auto classes = tree_isomorphism_classes(n);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      Graph g = classes[ci];
      Job job;
      job.record.key = "kimura/tree/n=" + pad(n, 2) + "/class=" + pad(static_cast<int>(ci), 2);
      job.record.description = "tree on " + std::to_string(n) +
                               " vertices, isomorphism class #" + std::to_string(ci) +
                               " (both sides label-invariant)";
      job.record.repro = shell_repro(g, "depth - --t 1 --field " +
                                            std::to_string(spec.field_char));
      job.run = [g, field](CaseRecord& rec) {
        KimuraResult kr = kimura_d(g);
        rec.formula = kr.value;
        rec.oracle = pd_squarefree(edge_ideal(g), field);
        rec.pass = (*rec.formula == *rec.oracle) && verify_strongly_disjoint(g, kr.witness);
        rec.detail = "witness " + witness_to_json_string(kr.witness);
      };
      jobs.push_back(std::move(job));
    }
  }

  for (int i = 0; i < spec.samples; ++i) {
    Job job;
    job.record.key = "kimura/random/sample=" + pad(i, 4);
    job.record.description = "seeded random connected weakly chordal graph";
    job.record.repro = "edgedepth verify kimura --max-n " + std::to_string(spec.max_n) +
                       " --samples " + std::to_string(spec.samples) + " --seed " +
                       std::to_string(spec.seed);
    int max_n = spec.max_n;
    auto seed = case_seed(spec.seed, 0x6b696d75, static_cast<std::uint64_t>(i));
    job.run = [max_n, seed, field](CaseRecord& rec) {
      Rng rng(seed);
      Graph g = random_connected_weakly_chordal(max_n, rng);
      KimuraResult kr = kimura_d(g);
      rec.formula = kr.value;
      rec.oracle = pd_squarefree(edge_ideal(g), field);
      rec.pass = (*rec.formula == *rec.oracle) && verify_strongly_disjoint(g, kr.witness);
      rec.detail = "graph: " + to_edge_list(g);
      std::replace(rec.detail.begin(), rec.detail.end(), '\n', ' ');
    };
    jobs.push_back(std::move(job));
  }
}

// -------------------------------------------------------------- lemmas

void build_lemmas_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  FieldSpec field{spec.field_char};
  DepthOptions dopts = spec.depth_opts;
  const int batch = 50;

  struct Property {
    const char* name;
    std::uint64_t stream;
    std::function<std::string(Rng&, const FieldSpec&, const DepthOptions&)> check;  // "" = pass
  };

  auto sample_pair = [](Rng& rng, MonomialIdeal& ideal, Monomial& f) {
    while (true) {
      ideal = random_monomial_ideal(6, 6, 2, rng);
      auto fo = random_monomial_outside(ideal, 2, rng);
      if (fo) {
        f = *fo;
        return;
      }
    }
  };

  std::vector<Property> props;
  props.push_back({"colon-upper", 1, [sample_pair](Rng& rng, const FieldSpec& f2,
                                                   const DepthOptions& d2) -> std::string {
                     MonomialIdeal ideal;
                     Monomial f;
                     sample_pair(rng, ideal, f);
                     int a = depth(ideal, f2, d2).depth;
                     int b = depth(colon(ideal, f), f2, d2).depth;
                     if (a <= b) return "";
                     return "depth " + std::to_string(a) + " > colon depth " + std::to_string(b) +
                            " for I=" + to_text(ideal) + " f=" + f.str();
                   }});
  props.push_back({"colon-membership", 2,
                   [sample_pair](Rng& rng, const FieldSpec& f2,
                                 const DepthOptions& d2) -> std::string {
                     MonomialIdeal ideal;
                     Monomial f;
                     sample_pair(rng, ideal, f);
                     int d0 = depth(ideal, f2, d2).depth;
                     int a = depth(colon(ideal, f), f2, d2).depth;
                     MonomialIdeal sum = add(ideal, MonomialIdeal::make(ideal.context(), {f}));
                     int b = depth(sum, f2, d2).depth;
                     if (d0 == a || d0 == b) return "";
                     return "depth " + std::to_string(d0) + " not in {" + std::to_string(a) +
                            "," + std::to_string(b) + "} for I=" + to_text(ideal) +
                            " f=" + f.str();
                   }});
  props.push_back({"variable-clearing", 3,
                   [](Rng& rng, const FieldSpec& f2, const DepthOptions& d2) -> std::string {
                     MonomialIdeal ideal = random_monomial_ideal(6, 6, 2, rng);
                     if (ideal.is_unit()) return "";
                     ClearedIdeal c = clear_variables(ideal);
                     int lhs = depth(ideal, f2, d2).depth;
                     int rhs = depth(c.reduced, f2, d2).depth + c.free_count;
                     if (lhs == rhs) return "";
                     return "clearing bookkeeping " + std::to_string(lhs) +
                            " != " + std::to_string(rhs) + " for I=" + to_text(ideal);
                   }});
  props.push_back({"polarization-shift", 4,
                   [](Rng& rng, const FieldSpec& f2, const DepthOptions& d2) -> std::string {
                     MonomialIdeal ideal = random_monomial_ideal(6, 6, 2, rng);
                     PolarizedIdeal p = polarize(ideal);
                     int lhs = depth(p.ideal, f2, d2).depth;
                     int rhs = depth(ideal, f2, d2).depth + p.new_var_count;
                     if (lhs == rhs) return "";
                     return "polarization shift " + std::to_string(lhs) +
                            " != " + std::to_string(rhs) + " for I=" + to_text(ideal);
                   }});
  props.push_back({"leaf-colon", 5,
                   [](Rng& rng, const FieldSpec&, const DepthOptions&) -> std::string {
                     Graph g = random_forest(rng.range(2, 8), rng);
                     LeafCensus lc = leaf_census(g);
                     const Edge& e = lc.leaf_edges.edges[static_cast<std::size_t>(
                         rng.below(static_cast<int>(lc.leaf_edges.size())))];
                     int t = rng.range(2, 4);
                     MonomialIdeal base = edge_ideal(g);
                     MonomialIdeal lhs = colon(power(base, t), edge_monomial(base.context(), e));
                     MonomialIdeal rhs = power(base, t - 1);
                     if (lhs == rhs) return "";
                     return "leaf colon differs at t=" + std::to_string(t) + " for " +
                            to_edge_list(g);
                   }});
  props.push_back({"forest-monotone", 6,
                   [](Rng& rng, const FieldSpec& f2, const DepthOptions& d2) -> std::string {
                     Graph g = random_forest(rng.range(2, 7), rng);
                     DepthProfile prof = depth_profile(g, 3, f2, d2);
                     for (std::size_t k = 1; k < prof.steps.size(); ++k)
                       if (prof.steps[k].second.depth > prof.steps[k - 1].second.depth)
                         return "profile increased at t=" + std::to_string(prof.steps[k].first) +
                                " for " + to_edge_list(g);
                     return "";
                   }});

  for (const auto& prop : props) {
    for (int start = 0; start < spec.samples; start += batch) {
      int end = std::min(start + batch, spec.samples);
      Job job;
      job.record.key = "lemmas/" + std::string(prop.name) + "/batch=" + pad(start / batch, 3);
      job.record.description = std::string(prop.name) + " samples [" + std::to_string(start) +
                               ", " + std::to_string(end) + ")";
      job.record.repro = "edgedepth verify lemmas --samples " + std::to_string(spec.samples) +
                         " --seed " + std::to_string(spec.seed) + " --field " +
                         std::to_string(spec.field_char);
      auto check = prop.check;
      auto stream = prop.stream;
      auto seed = spec.seed;
      job.run = [check, stream, seed, start, end, field, dopts](CaseRecord& rec) {
        int failures = 0;
        std::string first;
        for (int i = start; i < end; ++i) {
          Rng rng(case_seed(seed, stream, static_cast<std::uint64_t>(i)));
          std::string msg = check(rng, field, dopts);
          if (!msg.empty()) {
            ++failures;
            if (first.empty()) first = "sample " + std::to_string(i) + ": " + msg;
          }
        }
        rec.pass = failures == 0;
        rec.detail = failures == 0
                         ? std::to_string(end - start) + " samples passed"
                         : std::to_string(failures) + " failures; first: " + first;
      };
      jobs.push_back(std::move(job));
    }
  }
}

// --------------------------------------------------------------- dstab

void build_dstab_jobs(const CampaignSpec& spec, std::vector<Job>& jobs) {
  if (spec.max_n < 2 || spec.max_n > 6)
    throw infeasible_error("dstab: max-n must be in [2, 6]");
  FieldSpec field{spec.field_char};
  DepthOptions dopts = spec.depth_opts;

  for (int n = 2; n <= spec.max_n; ++n) {
    auto classes = tree_isomorphism_classes(n);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      Graph g = classes[ci];
      Job job;
      job.record.key = "dstab/n=" + pad(n, 2) + "/class=" + pad(static_cast<int>(ci), 2);
      job.record.description = "tree on " + std::to_string(n) + " vertices, class #" +
                               std::to_string(ci) + " (stabilization is label-invariant)";
      int tmax = std::max(n - leaf_census(g).count + 1, 1);
      job.record.repro = shell_repro(g, "profile - --t-max " + std::to_string(tmax) +
                                            " --field " + std::to_string(spec.field_char));
      job.run = [g, field, dopts](CaseRecord& rec) {
        int expected = dstab_tree(g);
        int tmax2 = std::max(expected + 1, 1);
        DepthProfile prof = depth_profile(g, tmax2, field, dopts);
        rec.formula = expected;
        rec.oracle = prof.stabilization ? *prof.stabilization : -1;
        rec.pass = prof.stabilization && *prof.stabilization == expected;
        std::string seq;
        for (const auto& [t, r] : prof.steps) seq += (seq.empty() ? "" : ",") + std::to_string(r.depth);
        rec.detail = "profile (" + seq + ")";
      };
      jobs.push_back(std::move(job));
    }
  }
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
  validate_field(FieldSpec{spec.field_char});
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Job> jobs;
  switch (spec.kind) {
    case CampaignKind::cm_tree: build_cm_tree_jobs(spec, jobs); break;
    case CampaignKind::bm: build_bm_jobs(spec, jobs); break;
    case CampaignKind::two_drop: build_two_drop_jobs(spec, jobs); break;
    case CampaignKind::kimura: build_kimura_jobs(spec, jobs); break;
    case CampaignKind::lemmas: build_lemmas_jobs(spec, jobs); break;
    case CampaignKind::dstab: build_dstab_jobs(spec, jobs); break;
  }

  CampaignReport report;
  report.spec = spec;
  run_jobs(jobs, spec.workers, report.cases);
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseRecord& a, const CaseRecord& b) { return a.key < b.key; });
  for (const auto& rec : report.cases) (rec.pass ? report.pass_count : report.fail_count)++;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string report_to_json_string(const CampaignReport& r) {
  nlohmann::json j;
  j["schema"] = "1";
  j["campaign"] = campaign_name(r.spec.kind);
  // workers is an execution detail, not configuration: identical seeds and
  // caps give byte-identical reports at any parallelism
  j["config"] = {{"max_d", r.spec.max_d},
                 {"max_power", r.spec.max_power},
                 {"max_n", r.spec.max_n},
                 {"samples", r.spec.samples},
                 {"with_d5", r.spec.with_d5},
                 {"squeeze_max_d", r.spec.squeeze_max_d},
                 {"seed", r.spec.seed},
                 {"field", r.spec.field_char}};
  j["summary"] = {{"cases", r.cases.size()},
                  {"pass", r.pass_count},
                  {"fail", r.fail_count},
                  {"status", r.passed() ? "pass" : "fail"}};
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& rec : r.cases) {
    nlohmann::json c;
    c["key"] = rec.key;
    c["description"] = rec.description;
    if (rec.formula) c["formula"] = *rec.formula;
    if (rec.oracle) c["oracle"] = *rec.oracle;
    c["pass"] = rec.pass;
    if (!rec.detail.empty()) c["detail"] = rec.detail;
    c["repro"] = rec.repro;
    cases.push_back(c);
  }
  j["cases"] = cases;
  return j.dump(2);
}

std::string report_summary(const CampaignReport& r) {
  std::ostringstream out;
  out << "campaign " << campaign_name(r.spec.kind) << ": " << r.pass_count << " passed, "
      << r.fail_count << " failed (" << r.cases.size() << " cases, "
      << r.wall_seconds << "s)\n";
  for (const auto& rec : r.cases) {
    if (rec.pass) continue;
    out << "  FAIL " << rec.key;
    if (rec.formula && rec.oracle)
      out << " (formula " << *rec.formula << ", oracle " << *rec.oracle << ")";
    if (!rec.detail.empty()) out << " -- " << rec.detail;
    out << "\n    repro: " << rec.repro << "\n";
  }
  return out.str();
}

}  // namespace edgedepth
