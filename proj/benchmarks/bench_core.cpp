#include <benchmark/benchmark.h>

#include "edgedepth/campaigns.hpp"
#include "edgedepth/gf_rank.hpp"
#include "edgedepth/homology.hpp"
#include "edgedepth/kimura.hpp"
#include "edgedepth/monomial.hpp"

using namespace edgedepth;

namespace {

Graph path_graph(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    e.emplace_back("x" + std::to_string(i), "x" + std::to_string(i + 1));
  return Graph::build(v, e);
}

void BM_Gf2Rank(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(42);
  std::vector<std::vector<std::uint64_t>> cols;
  int words = (n + 63) / 64;
  for (int c = 0; c < n; ++c) {
    std::vector<std::uint64_t> col(static_cast<std::size_t>(words));
    for (auto& w : col) w = rng.next();
    cols.push_back(std::move(col));
  }
  for (auto _ : state) {
    Gf2RankAccumulator acc(n);
    for (auto col : cols) acc.add_column(col);
    benchmark::DoNotOptimize(acc.rank());
  }
}
BENCHMARK(BM_Gf2Rank)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PowerIdeal(benchmark::State& state) {
  MonomialIdeal base = edge_ideal(whisker_all(path_graph(4)));
  int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(base, t).generator_count());
}
BENCHMARK(BM_PowerIdeal)->Arg(3)->Arg(5);

void BM_DepthWhiskerPathPower(benchmark::State& state) {
  Graph g = whisker_all(path_graph(static_cast<int>(state.range(0))));
  MonomialIdeal it = power(edge_ideal(g), static_cast<int>(state.range(1)));
  FieldSpec f{2};
  for (auto _ : state) {
    clear_homology_cache();
    benchmark::DoNotOptimize(depth(it, f).depth);
  }
}
BENCHMARK(BM_DepthWhiskerPathPower)->Args({3, 3})->Args({4, 4})->Args({4, 5});

void BM_PdSquarefreeTree(benchmark::State& state) {
  Rng rng(7);
  Graph t = random_tree(static_cast<int>(state.range(0)), rng);
  MonomialIdeal i = edge_ideal(t);
  FieldSpec f{2};
  for (auto _ : state) {
    clear_homology_cache();
    benchmark::DoNotOptimize(pd_squarefree(i, f));
  }
}
BENCHMARK(BM_PdSquarefreeTree)->Arg(8)->Arg(12);

void BM_KimuraSearch(benchmark::State& state) {
  Rng rng(11);
  Graph g = random_connected_weakly_chordal(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(kimura_d(g).value);
}
BENCHMARK(BM_KimuraSearch)->Arg(8)->Arg(11);

void BM_WeaklyChordal(benchmark::State& state) {
  // dense-ish graph at the cap: both the graph and its complement get scanned
  int n = static_cast<int>(state.range(0));
  Rng rng(13);
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.unit() < 0.5) e.emplace_back(v[static_cast<std::size_t>(a)],
                                           v[static_cast<std::size_t>(b)]);
  Graph g = Graph::build(v, e);
  for (auto _ : state) benchmark::DoNotOptimize(is_weakly_chordal(g));
}
BENCHMARK(BM_WeaklyChordal)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
