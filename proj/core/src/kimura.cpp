#include "edgedepth/kimura.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace edgedepth {

bool verify_strongly_disjoint(const Graph& g, const StronglyDisjointFamily& fam) {
  if (fam.blocks.empty()) return false;
  if (fam.certificates.size() != fam.blocks.size()) return false;

  std::uint64_t used = 0;
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    const auto& blk = fam.blocks[i];
    if (blk.a.empty() || blk.b.empty()) return false;
    std::uint64_t ma = g.mask_of(blk.a), mb = g.mask_of(blk.b);
    if (ma & mb) return false;
    // condition (1): complete bipartite across the parts
    for (const auto& la : blk.a.labels)
      for (const auto& lb : blk.b.labels)
        if (!g.has_edge(la, lb)) return false;
    // condition (2): pairwise disjoint vertex sets
    if (used & (ma | mb)) return false;
    used |= ma | mb;
    // certificate e_i must be an edge of B_i
    const Edge& e = fam.certificates.edges[i];
    std::uint64_t ue = 1ull << g.index_of(e.u), ve = 1ull << g.index_of(e.v);
    bool cross = ((ue & ma) && (ve & mb)) || ((ue & mb) && (ve & ma));
    if (!cross) return false;
  }
  // condition (3): the certificates are an induced matching of the host
  return is_induced_matching(g, fam.certificates);
}

namespace {

struct SearchState {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::pair<int, int>> all_edges;  // (u,v), u < v, sorted

  int best_value = 0;
  std::vector<int> best_encoding;
  std::vector<std::pair<int, int>> best_certs;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> best_blocks;

  std::vector<std::pair<int, int>> certs;
  std::vector<std::uint64_t> side_a, side_b;

  std::vector<int> encode(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& blocks,
                          const std::vector<std::pair<int, int>>& cs) const {
    std::vector<int> enc;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      enc.push_back(cs[i].first);
      enc.push_back(cs[i].second);
      for (int v = 0; v < n; ++v)
        if ((blocks[i].first >> v) & 1u) enc.push_back(v);
      enc.push_back(-1);
      for (int v = 0; v < n; ++v)
        if ((blocks[i].second >> v) & 1u) enc.push_back(v);
      enc.push_back(-2);
    }
    return enc;
  }

  void consider() {
    int value = 0;
    for (std::size_t i = 0; i < certs.size(); ++i)
      value += std::popcount(side_a[i]) + std::popcount(side_b[i]);
    value -= static_cast<int>(certs.size());
    if (value < best_value) return;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
    for (std::size_t i = 0; i < certs.size(); ++i) blocks.emplace_back(side_a[i], side_b[i]);
    std::vector<int> enc = encode(blocks, certs);
    if (value > best_value || best_encoding.empty() || enc < best_encoding) {
      best_value = value;
      best_encoding = std::move(enc);
      best_certs = certs;
      best_blocks = std::move(blocks);
    }
  }

  // assigns free vertices (ascending, starting at `from`) to block sides
  void grow(int from, std::uint64_t used, int remaining) {
    int current = 0;
    for (std::size_t i = 0; i < certs.size(); ++i)
      current += std::popcount(side_a[i]) + std::popcount(side_b[i]);
    current -= static_cast<int>(certs.size());
    if (current + remaining < best_value) return;  // cannot beat the best
    if (from == n) {
      consider();
      return;
    }
    if ((used >> from) & 1u) {
      grow(from + 1, used, remaining);
      return;
    }
    std::uint64_t wbit = 1ull << from;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      // join side A: adjacent to all of side B
      if ((adj[static_cast<std::size_t>(from)] & side_b[i]) == side_b[i]) {
        side_a[i] |= wbit;
        grow(from + 1, used | wbit, remaining - 1);
        side_a[i] &= ~wbit;
      }
      if ((adj[static_cast<std::size_t>(from)] & side_a[i]) == side_a[i]) {
        side_b[i] |= wbit;
        grow(from + 1, used | wbit, remaining - 1);
        side_b[i] &= ~wbit;
      }
    }
    grow(from + 1, used, remaining - 1);  // leave it out
  }

  // extends the certificate skeleton (an induced matching) edge by edge
  void skeleton(std::size_t next_edge, std::uint64_t blocked, std::uint64_t used) {
    if (!certs.empty()) {
      int free_left = n - std::popcount(used);
      // value <= g + #free vertices; equal bound still explored for tie-break
      if (static_cast<int>(certs.size()) + free_left >= best_value)
        grow(0, used, free_left);
    }
    for (std::size_t k = next_edge; k < all_edges.size(); ++k) {
      auto [u, v] = all_edges[k];
      std::uint64_t ub = 1ull << u, vb = 1ull << v;
      if ((blocked & ub) || (blocked & vb)) continue;
      certs.emplace_back(u, v);
      side_a.push_back(ub);
      side_b.push_back(vb);
      std::uint64_t nbhd = adj[static_cast<std::size_t>(u)] | adj[static_cast<std::size_t>(v)] | ub | vb;
      skeleton(k + 1, blocked | nbhd, used | ub | vb);
      certs.pop_back();
      side_a.pop_back();
      side_b.pop_back();
    }
  }
};

}  // namespace

KimuraResult kimura_d(const Graph& g, const KimuraOptions& opts) {
  if (g.edge_count() == 0) throw error("kimura_d: graph has no edges");
  if (g.vertex_count() > opts.vertex_cap)
    throw infeasible_error("kimura_d: " + std::to_string(g.vertex_count()) +
                           " vertices exceeds cap " + std::to_string(opts.vertex_cap));

  SearchState st;
  st.g = &g;
  st.n = g.vertex_count();
  st.adj.resize(static_cast<std::size_t>(st.n));
  for (int v = 0; v < st.n; ++v) st.adj[static_cast<std::size_t>(v)] = g.adjacency_mask(v);
  for (const auto& e : g.edges()) {
    int a = g.index_of(e.u), b = g.index_of(e.v);
    st.all_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(st.all_edges.begin(), st.all_edges.end());
  st.skeleton(0, 0, 0);

  KimuraResult out;
  out.value = st.best_value;
  for (std::size_t i = 0; i < st.best_certs.size(); ++i) {
    CompleteBipartiteSubgraph blk;
    blk.a.labels = g.labels_of(st.best_blocks[i].first);
    blk.b.labels = g.labels_of(st.best_blocks[i].second);
    out.witness.blocks.push_back(std::move(blk));
    out.witness.certificates.edges.emplace_back(g.label(st.best_certs[i].first),
                                                g.label(st.best_certs[i].second));
  }
  if (!verify_strongly_disjoint(g, out.witness))
    throw error("kimura_d: produced witness failed verification; this is a bug");
  return out;
}

int pd_weakly_chordal(const Graph& g, const KimuraOptions& opts) {
  if (g.edge_count() == 0) throw error("pd_weakly_chordal: graph has no edges");
  if (!is_weakly_chordal(g, std::max(16, opts.vertex_cap)))
    throw error("pd_weakly_chordal: graph is not weakly chordal");
  return kimura_d(g, opts).value;
}

std::string witness_to_json_string(const StronglyDisjointFamily& fam) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    nlohmann::json b;
    b["A"] = fam.blocks[i].a.labels;
    b["B"] = fam.blocks[i].b.labels;
    b["cert"] = {fam.certificates.edges[i].u, fam.certificates.edges[i].v};
    arr.push_back(b);
  }
  return arr.dump();
}

}  // namespace edgedepth
