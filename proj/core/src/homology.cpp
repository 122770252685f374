#include "edgedepth/homology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "edgedepth/gf_rank.hpp"
#include "json.hpp"

namespace edgedepth {

void validate_field(const FieldSpec& f) {
  if (!is_prime(f.characteristic))
    throw error("field characteristic " + std::to_string(f.characteristic) + " is not prime");
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> ground) {
  SimplicialComplex k;
  k.ground_ = std::move(ground);
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground,
                                                 std::vector<std::uint32_t> facets) {
  if (ground.size() > 32) throw infeasible_error("simplicial complex ground set exceeds 32");
  SimplicialComplex k;
  k.ground_ = std::move(ground);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::uint32_t f : facets) {
    if (k.ground_.size() < 32 && (f >> k.ground_.size()) != 0)
      throw error("facet mentions a vertex outside the ground set");
    bool maximal = true;
    for (std::uint32_t g : facets)
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    if (maximal) k.facets_.push_back(f);
  }
  return k;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw error("the void complex has no dimension");
  int d = -1;
  for (std::uint32_t f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool SimplicialComplex::is_face(std::uint32_t mask) const {
  for (std::uint32_t f : facets_)
    if ((mask & ~f) == 0) return true;
  return false;
}

namespace {

// ---------------------------------------------------------------- faces

struct FaceTable {
  bool void_complex = true;
  int ground = 0;
  std::vector<std::vector<std::uint32_t>> levels;  // levels[c]: sorted masks of popcount c
};

FaceTable faces_from_facets(int ground, const std::vector<std::uint32_t>& facets,
                            std::int64_t budget) {
  FaceTable t;
  t.ground = ground;
  if (facets.empty()) return t;
  t.void_complex = false;
  t.levels.assign(static_cast<std::size_t>(ground) + 1, {});

  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> stack(facets.begin(), facets.end());
  std::int64_t count = 0;
  while (!stack.empty()) {
    std::uint32_t f = stack.back();
    stack.pop_back();
    if (!seen.insert(f).second) continue;
    if (++count > budget) throw infeasible_error("face enumeration exceeded the budget");
    t.levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    std::uint32_t rest = f;
    while (rest) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (!seen.count(f ^ bit)) stack.push_back(f ^ bit);
    }
  }
  for (auto& lvl : t.levels) std::sort(lvl.begin(), lvl.end());
  while (!t.levels.empty() && t.levels.back().empty()) t.levels.pop_back();
  return t;
}

// Restricted Stanley-Reisner complex: faces are the subsets of sigma that
// contain no generator support. Supports must already be subsets of sigma.
FaceTable faces_from_nonfaces(std::uint32_t sigma, int ground_bits,
                              const std::vector<std::uint32_t>& supports, std::int64_t budget) {
  FaceTable t;
  t.ground = ground_bits;
  t.void_complex = false;
  t.levels.assign(static_cast<std::size_t>(std::popcount(sigma)) + 1, {});

  std::vector<int> verts;
  for (int v = 0; v < ground_bits; ++v)
    if ((sigma >> v) & 1u) verts.push_back(v);

  // supports touching each vertex; a support can only become violated when
  // one of its vertices is the one just added
  std::vector<std::vector<std::uint32_t>> by_vertex(static_cast<std::size_t>(ground_bits));
  for (std::uint32_t s : supports)
    for (int v = 0; v < ground_bits; ++v)
      if ((s >> v) & 1u) by_vertex[static_cast<std::size_t>(v)].push_back(s);

  std::int64_t count = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [face, from] = stack.back();
    stack.pop_back();
    if (++count > budget) throw infeasible_error("face enumeration exceeded the budget");
    t.levels[static_cast<std::size_t>(std::popcount(face))].push_back(face);
    for (std::size_t k = from; k < verts.size(); ++k) {
      int v = verts[k];
      std::uint32_t cand = face | (1u << v);
      bool bad = false;
      for (std::uint32_t s : by_vertex[static_cast<std::size_t>(v)])
        if ((s & ~cand) == 0) {
          bad = true;
          break;
        }
      if (!bad) stack.emplace_back(cand, k + 1);
    }
  }
  for (auto& lvl : t.levels) std::sort(lvl.begin(), lvl.end());
  while (!t.levels.empty() && t.levels.back().empty()) t.levels.pop_back();
  return t;
}

// ------------------------------------------------------------- homology

std::vector<int> homology_ranks_from_faces(const FaceTable& t, int p) {
  if (t.void_complex || t.levels.empty()) return {};
  std::size_t top = t.levels.size();  // levels 0..top-1 populated
  std::vector<int> bd_rank(top + 1, 0);

  for (std::size_t c = 1; c < top; ++c) {
    const auto& cur = t.levels[c];
    const auto& below = t.levels[c - 1];
    if (cur.empty() || below.empty()) continue;
    int rows = static_cast<int>(below.size());
    auto row_of = [&](std::uint32_t m) {
      return static_cast<int>(std::lower_bound(below.begin(), below.end(), m) - below.begin());
    };
    if (p == 2) {
      Gf2RankAccumulator acc(rows);
      std::vector<std::uint64_t> col;
      for (std::uint32_t f : cur) {
        col.assign(static_cast<std::size_t>(acc.words()), 0);
        std::uint32_t rest = f;
        while (rest) {
          std::uint32_t bit = rest & (~rest + 1);
          rest ^= bit;
          int r = row_of(f ^ bit);
          col[static_cast<std::size_t>(r >> 6)] ^= 1ull << (r & 63);
        }
        acc.add_column(col);
      }
      bd_rank[c] = acc.rank();
    } else {
      std::vector<std::vector<std::int32_t>> cols;
      cols.reserve(cur.size());
      for (std::uint32_t f : cur) {
        std::vector<std::int32_t> col(static_cast<std::size_t>(rows), 0);
        std::uint32_t rest = f;
        int sign = 1;
        while (rest) {
          std::uint32_t bit = rest & (~rest + 1);
          rest ^= bit;
          col[static_cast<std::size_t>(row_of(f ^ bit))] =
              static_cast<std::int32_t>(sign > 0 ? 1 : p - 1);
          sign = -sign;
        }
        cols.push_back(std::move(col));
      }
      bd_rank[c] = gfp_rank(std::move(cols), rows, p);
    }
  }

  std::vector<int> h(top, 0);
  for (std::size_t c = 0; c < top; ++c)
    h[c] = static_cast<int>(t.levels[c].size()) - bd_rank[c] - bd_rank[c + 1];
  return h;  // h[c] = dim H~_{c-1}
}

// ------------------------------------------------------------------ memo

struct HomologyCache {
  std::mutex mu;
  std::unordered_map<std::string, std::vector<int>> map;
};
HomologyCache& cache() {
  static HomologyCache c;
  return c;
}

std::string cache_key(char tag, int ground, int p, const std::vector<std::uint32_t>& masks) {
  std::string key;
  key.reserve(6 + 4 * masks.size());
  key.push_back(tag);
  key.push_back(static_cast<char>(ground));
  key.append(reinterpret_cast<const char*>(&p), sizeof(p));
  for (std::uint32_t m : masks) key.append(reinterpret_cast<const char*>(&m), sizeof(m));
  return key;
}

std::vector<int> cached_homology(const std::string& key, const std::function<FaceTable()>& build,
                                 int p) {
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().map.find(key);
    if (it != cache().map.end()) return it->second;
  }
  std::vector<int> ranks = homology_ranks_from_faces(build(), p);
  std::lock_guard<std::mutex> lock(cache().mu);
  return cache().map.emplace(key, std::move(ranks)).first->second;
}

// densely remaps the bits of sigma to 0..s-1
std::vector<std::uint32_t> remap_masks(std::uint32_t sigma, int ground_bits,
                                       const std::vector<std::uint32_t>& masks) {
  std::array<int, 32> to{};
  int s = 0;
  for (int v = 0; v < ground_bits; ++v)
    if ((sigma >> v) & 1u) to[static_cast<std::size_t>(v)] = s++;
  std::vector<std::uint32_t> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) {
    std::uint32_t r = 0, rest = m;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      r |= 1u << to[static_cast<std::size_t>(v)];
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------- packed vectors

struct PackedExp {
  std::array<std::uint8_t, 16> v{};
  bool operator==(const PackedExp& o) const { return v == o.v; }
};

struct PackedHash {
  std::size_t operator()(const PackedExp& p) const {
    std::uint64_t a, b;
    std::memcpy(&a, p.v.data(), 8);
    std::memcpy(&b, p.v.data() + 8, 8);
    std::uint64_t h = a * 0x9e3779b97f4a7c15ull;
    h ^= (b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h * 0xc2b2ae3d27d4eb4full);
  }
};

PackedExp pack_join(const PackedExp& a, const PackedExp& b) {
  PackedExp r;
  for (int i = 0; i < 16; ++i) r.v[static_cast<std::size_t>(i)] =
      std::max(a.v[static_cast<std::size_t>(i)], b.v[static_cast<std::size_t>(i)]);
  return r;
}

bool pack_leq(const PackedExp& a, const PackedExp& b) {
  for (int i = 0; i < 16; ++i)
    if (a.v[static_cast<std::size_t>(i)] > b.v[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw error("stanley_reisner: ideal is not squarefree");
  if (i.is_unit()) throw error("stanley_reisner: the unit ideal has no Stanley-Reisner complex");
  int n = i.context().size();
  if (n > 24) throw infeasible_error("stanley_reisner: context larger than 24");
  std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  if (i.is_zero())
    return SimplicialComplex::from_facets(i.context().names(), {full});

  std::vector<std::uint32_t> supports;
  for (const auto& g : i.generators()) {
    std::uint32_t m = 0;
    for (int v = 0; v < n; ++v)
      if (g.exponent(v)) m |= 1u << v;
    supports.push_back(m);
  }
  FaceTable t = faces_from_nonfaces(full, n, supports, 6'000'000);
  std::unordered_set<std::uint32_t> all;
  for (const auto& lvl : t.levels) all.insert(lvl.begin(), lvl.end());
  std::vector<std::uint32_t> facets;
  for (const auto& lvl : t.levels)
    for (std::uint32_t f : lvl) {
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!((f >> v) & 1u) && ((full >> v) & 1u) && all.count(f | (1u << v))) maximal = false;
      if (maximal) facets.push_back(f);
    }
  return SimplicialComplex::from_facets(i.context().names(), std::move(facets));
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& f) {
  validate_field(f);
  if (k.is_void()) return {};
  FaceTable t = faces_from_facets(k.ground_size(), k.facets(), 6'000'000);
  return homology_ranks_from_faces(t, f.characteristic);
}

int pd_squarefree(const MonomialIdeal& i, const FieldSpec& f, const PdOptions& opts) {
  validate_field(f);
  if (!i.is_squarefree()) throw error("pd_squarefree: ideal is not squarefree");
  if (i.is_unit()) throw error("pd_squarefree: ideal must be proper");
  if (i.is_zero()) return 0;
  int n = i.context().size();
  if (n > opts.ground_cap)
    throw infeasible_error("pd_squarefree: " + std::to_string(n) + " variables exceeds cap " +
                           std::to_string(opts.ground_cap));

  std::vector<std::uint32_t> supports;
  for (const auto& g : i.generators()) {
    std::uint32_t m = 0;
    for (int v = 0; v < n; ++v)
      if (g.exponent(v)) m |= 1u << v;
    supports.push_back(m);
  }

  std::vector<std::uint32_t> sigmas;
  if (opts.full_subsets) {
    if ((std::int64_t(1) << n) > opts.subset_budget)
      throw infeasible_error("pd_squarefree: 2^" + std::to_string(n) + " subsets exceed the budget");
    for (std::uint32_t s = 1; s < (1u << n); ++s) sigmas.push_back(s);
  } else {
    std::unordered_set<std::uint32_t> seen(supports.begin(), supports.end());
    std::deque<std::uint32_t> frontier(supports.begin(), supports.end());
    std::int64_t work = 0;
    while (!frontier.empty()) {
      std::uint32_t b = frontier.front();
      frontier.pop_front();
      work += static_cast<std::int64_t>(supports.size());
      if (work > opts.work_budget)
        throw infeasible_error("pd_squarefree: support-lattice closure exceeded the work budget");
      for (std::uint32_t s : supports) {
        std::uint32_t u = b | s;
        if (seen.insert(u).second) {
          if (static_cast<std::int64_t>(seen.size()) > opts.subset_budget)
            throw infeasible_error("pd_squarefree: support lattice exceeded the budget");
          frontier.push_back(u);
        }
      }
    }
    sigmas.assign(seen.begin(), seen.end());
  }

  int pd = 0;  // sigma = ∅ contributes beta_{0,0} = 1
  for (std::uint32_t sigma : sigmas) {
    std::vector<std::uint32_t> local;
    for (std::uint32_t s : supports)
      if ((s & ~sigma) == 0) local.push_back(s);
    if (local.empty()) continue;  // full simplex, contractible
    int size = std::popcount(sigma);
    auto remapped = remap_masks(sigma, n, local);
    std::string key = cache_key('N', size, f.characteristic, remapped);
    auto ranks = cached_homology(
        key,
        [&] {
          std::uint32_t dense = size == 32 ? ~0u : ((1u << size) - 1);
          return faces_from_nonfaces(dense, size, remapped, opts.face_budget);
        },
        f.characteristic);
    for (std::size_t c = 0; c < ranks.size(); ++c) {
      if (ranks[c] == 0) continue;
      int j = static_cast<int>(c) - 1;
      pd = std::max(pd, size - j - 1);
    }
  }
  return pd;
}

int pd_koszul(const MonomialIdeal& i, const FieldSpec& f, const KoszulOptions& opts) {
  validate_field(f);
  if (i.is_unit()) throw error("pd_koszul: ideal must be proper");
  if (i.is_zero()) return 0;
  int n = i.context().size();
  if (n > 16)
    throw infeasible_error("pd_koszul: " + std::to_string(n) + " variables exceeds 16");

  std::vector<PackedExp> gens;
  for (const auto& g : i.generators()) {
    PackedExp p;
    for (int v = 0; v < n; ++v) p.v[static_cast<std::size_t>(v)] = g.exponent(v);
    gens.push_back(p);
  }

  // lcm lattice: closure of the generator degrees under join
  std::unordered_set<PackedExp, PackedHash> lattice(gens.begin(), gens.end());
  lattice.reserve(1 << 16);
  std::deque<PackedExp> frontier(gens.begin(), gens.end());
  std::int64_t work = 0;
  while (!frontier.empty()) {
    PackedExp b = frontier.front();
    frontier.pop_front();
    work += static_cast<std::int64_t>(gens.size());
    if (work > opts.work_budget)
      throw infeasible_error("pd_koszul: lcm-lattice closure exceeded the work budget");
    for (const PackedExp& g : gens) {
      PackedExp u = pack_join(b, g);
      if (lattice.insert(u).second) {
        if (static_cast<std::int64_t>(lattice.size()) > opts.lattice_budget)
          throw infeasible_error("pd_koszul: lcm lattice exceeded the budget");
        frontier.push_back(u);
      }
    }
  }

  int pd = 0;
  std::vector<int> supp;
  std::vector<std::uint32_t> facets;
  for (const PackedExp& b : lattice) {
    supp.clear();
    for (int v = 0; v < n; ++v)
      if (b.v[static_cast<std::size_t>(v)]) supp.push_back(v);
    int s = static_cast<int>(supp.size());

    // K^b facets: supp(b) minus the tight variables of each divisor generator
    facets.clear();
    for (const PackedExp& g : gens) {
      if (!pack_leq(g, b)) continue;
      std::uint32_t m = 0;
      for (int k = 0; k < s; ++k) {
        int v = supp[static_cast<std::size_t>(k)];
        if (g.v[static_cast<std::size_t>(v)] != b.v[static_cast<std::size_t>(v)]) m |= 1u << k;
      }
      facets.push_back(m);
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t m : facets) {
      bool is_max = true;
      for (std::uint32_t o : facets)
        if (o != m && (m & ~o) == 0) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(m);
    }

    std::string key = cache_key('F', s, f.characteristic, maximal);
    auto ranks = cached_homology(
        key, [&] { return faces_from_facets(s, maximal, 2'000'000); }, f.characteristic);
    for (std::size_t c = 0; c < ranks.size(); ++c) {
      if (ranks[c] == 0) continue;
      int j = static_cast<int>(c) - 1;  // beta_{j+2, b}(S/I) != 0
      pd = std::max(pd, j + 2);
    }
  }
  return pd;
}

std::string depth_result_json(const DepthResult& r, int t) {
  nlohmann::json j;
  j["t"] = t;
  j["depth"] = r.depth;
  j["pd"] = r.pd;
  j["n"] = r.ambient_n;
  j["char"] = r.field.characteristic;
  j["method"] = r.method;
  return j.dump();
}

DepthResult depth(const MonomialIdeal& i, const FieldSpec& f, const DepthOptions& opts) {
  validate_field(f);
  if (i.is_unit()) throw error("depth: the unit ideal is rejected");
  int n = i.context().size();
  DepthResult out;
  out.ambient_n = n;
  out.field = f;
  out.method = "hochster";
  if (i.is_zero()) {
    out.depth = n;
    out.pd = 0;
    return out;
  }

  ClearedIdeal cleared = clear_variables(i);
  int pd_reduced = 0;
  const MonomialIdeal& j = cleared.reduced;
  if (!j.is_zero()) {
    PolarizedIdeal pol = polarize(j);
    int npol = pol.ideal.context().size();
    int nred = j.context().size();
    if (npol <= opts.literal_cap || (j.is_squarefree() && nred <= opts.pd.ground_cap)) {
      PdOptions po = opts.pd;
      po.ground_cap = std::max(po.ground_cap, npol);
      pd_reduced = pd_squarefree(pol.ideal, f, po);
    } else if (nred <= 16) {
      pd_reduced = pd_koszul(j, f, opts.koszul);
    } else {
      throw infeasible_error("depth: ideal has " + std::to_string(nred) +
                             " active variables and polarizes to " + std::to_string(npol) +
                             "; both oracle routes exceed their caps");
    }
  }
  out.pd = pd_reduced + cleared.pure_count;
  out.depth = n - out.pd;
  return out;
}

DepthProfile depth_profile(const Graph& g, int t_max, const FieldSpec& f,
                           const DepthOptions& opts) {
  if (t_max < 1) throw error("depth_profile: t_max must be >= 1");
  DepthProfile prof;
  prof.source = "edge ideal of graph on " + std::to_string(g.vertex_count()) + " vertices";
  MonomialIdeal base = edge_ideal(g);
  if (base.is_zero()) throw error("depth_profile: graph has no edges");

  for (int t = 1; t <= t_max; ++t) {
    try {
      DepthResult r = depth(power(base, t), f, opts);
      prof.steps.emplace_back(t, r);
    } catch (const infeasible_error& ex) {
      prof.truncated = true;
      prof.truncation_reason = ex.what();
      break;
    }
  }

  if (!prof.steps.empty()) {
    std::size_t k = prof.steps.size() - 1;
    while (k > 0 && prof.steps[k - 1].second.depth == prof.steps.back().second.depth) --k;
    prof.stabilization = prof.steps[k].first;
  }

  // leaf-edge monotonicity is a theorem; a violation indicates an oracle bug
  if (leaf_census(g).count > 0) {
    for (std::size_t k = 1; k < prof.steps.size(); ++k)
      if (prof.steps[k].second.depth > prof.steps[k - 1].second.depth)
        throw error("depth_profile: non-monotone depth sequence for a graph with a leaf edge");
  }

  if (is_tree(g) && prof.stabilization && !prof.truncated) {
    int expected = g.vertex_count() - leaf_census(g).count;
    prof.confirmed = (*prof.stabilization == expected) &&
                     prof.steps.back().first >= expected;
  }
  return prof;
}

void clear_homology_cache() {
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().map.clear();
}

}  // namespace edgedepth
