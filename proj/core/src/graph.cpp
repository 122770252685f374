#include "edgedepth/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace edgedepth {

Edge::Edge(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  u = std::move(a);
  v = std::move(b);
}

bool VertexSet::contains(const std::string& l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

Graph Graph::build(std::vector<std::string> vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  if (vertices.size() > 64)
    throw infeasible_error("graph has " + std::to_string(vertices.size()) +
                           " vertices; at most 64 supported");
  g.labels_ = std::move(vertices);
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], static_cast<int>(i)).second)
      throw error("duplicate vertex label '" + g.labels_[i] + "'");
  }
  g.adj_.assign(g.labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    auto ia = g.index_.find(a), ib = g.index_.find(b);
    if (ia == g.index_.end() || ib == g.index_.end())
      throw error("edge {" + a + "," + b + "} has an undeclared endpoint");
    if (ia->second == ib->second) throw error("loop at vertex '" + a + "'");
    if (g.has_edge(ia->second, ib->second))
      throw error("duplicate edge {" + a + "," + b + "}");
    g.adj_[static_cast<std::size_t>(ia->second)] |= 1ull << ib->second;
    g.adj_[static_cast<std::size_t>(ib->second)] |= 1ull << ia->second;
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

int Graph::index_of(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw error("unknown vertex '" + l + "'");
  return it->second;
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
  return has_edge(index_of(a), index_of(b));
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

bool Graph::operator==(const Graph& o) const {
  if (edges_ != o.edges_) return false;
  std::vector<std::string> a = labels_, b = o.labels_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::uint64_t Graph::full_mask() const {
  int n = vertex_count();
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

std::uint64_t Graph::mask_of(const VertexSet& s) const {
  std::uint64_t m = 0;
  for (const auto& l : s.labels) {
    std::uint64_t bit = 1ull << index_of(l);
    if (m & bit) throw error("repeated vertex '" + l + "' in vertex set");
    m |= bit;
  }
  return m;
}

std::vector<std::string> Graph::labels_of(std::uint64_t mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < vertex_count(); ++i)
    if ((mask >> i) & 1u) out.push_back(labels_[static_cast<std::size_t>(i)]);
  return out;
}

Graph parse_graph(const std::string& text) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  auto declare = [&](const std::string& v) {
    if (seen.emplace(v, 1).second) vertices.push_back(v);
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 1) {
      declare(tok[0]);
    } else if (tok.size() == 2) {
      if (tok[0] == tok[1]) throw parse_error("loop at vertex '" + tok[0] + "'", line_no);
      declare(tok[0]);
      declare(tok[1]);
      Edge e(tok[0], tok[1]);
      for (const auto& [a, b] : edges)
        if (Edge(a, b) == e)
          throw parse_error("duplicate edge {" + tok[0] + "," + tok[1] + "}", line_no);
      edges.emplace_back(tok[0], tok[1]);
    } else {
      throw parse_error("expected 1 or 2 tokens, got " + std::to_string(tok.size()), line_no);
    }
  }
  return Graph::build(std::move(vertices), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  std::uint64_t covered = 0;
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
    covered |= 1ull << g.index_of(e.u);
    covered |= 1ull << g.index_of(e.v);
  }
  for (int i = 0; i < g.vertex_count(); ++i)
    if (!((covered >> i) & 1u)) out << g.label(i) << '\n';
  return out.str();
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::uint64_t m = g.mask_of(s);
  std::uint64_t out = m;
  for (int i = 0; i < g.vertex_count(); ++i)
    if ((m >> i) & 1u) out |= g.adjacency_mask(i);
  return VertexSet{g.labels_of(out)};
}

std::vector<std::pair<int, int>> edge_indices(const Graph& g, const EdgeSet& e) {
  std::vector<std::pair<int, int>> out;
  std::vector<Edge> seen;
  for (const auto& ed : e.edges) {
    int a = g.index_of(ed.u), b = g.index_of(ed.v);
    if (!g.has_edge(a, b)) throw error("{" + ed.u + "," + ed.v + "} is not an edge of the graph");
    Edge canon(ed.u, ed.v);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end())
      throw error("repeated edge {" + ed.u + "," + ed.v + "} in edge set");
    seen.push_back(canon);
    out.emplace_back(a, b);
  }
  return out;
}

static std::uint64_t support_mask(const Graph& g, const EdgeSet& e) {
  std::uint64_t m = 0;
  for (const auto& [a, b] : edge_indices(g, e)) m |= (1ull << a) | (1ull << b);
  return m;
}

NeighborhoodSplit edge_neighborhood_split(const Graph& g, const EdgeSet& e) {
  if (e.empty()) throw error("edge set must be nonempty");
  std::uint64_t supp = support_mask(g, e);
  std::uint64_t nbhd = supp;
  for (int i = 0; i < g.vertex_count(); ++i)
    if ((supp >> i) & 1u) nbhd |= g.adjacency_mask(i);
  return NeighborhoodSplit{induced_subgraph_mask(g, nbhd),
                           induced_subgraph_mask(g, g.full_mask() & ~nbhd)};
}

Graph induced_subgraph(const Graph& g, const VertexSet& u) {
  return induced_subgraph_mask(g, g.mask_of(u));
}

Graph induced_subgraph_mask(const Graph& g, std::uint64_t mask) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < g.vertex_count(); ++i)
    if ((mask >> i) & 1u) verts.push_back(g.label(i));
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    std::uint64_t nb = g.adjacency_mask(i) & mask;
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if ((nb >> j) & 1u) edges.emplace_back(g.label(i), g.label(j));
  }
  return Graph::build(std::move(verts), edges);
}

static std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = g.full_mask();
  while (left) {
    int s = std::countr_zero(left);
    std::uint64_t comp = 1ull << s, frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (int i = 0; i < g.vertex_count(); ++i)
        if ((frontier >> i) & 1u) next |= g.adjacency_mask(i);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_forest(const Graph& g) {
  for (std::uint64_t comp : component_masks(g)) {
    int nv = std::popcount(comp), ne = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
      if ((comp >> i) & 1u) ne += std::popcount(g.adjacency_mask(i) & comp);
    ne /= 2;
    if (ne != nv - 1) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() == g.vertex_count() - 1 &&
         component_masks(g).size() == 1;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (std::uint64_t comp : component_masks(g)) out.push_back(induced_subgraph_mask(g, comp));
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.adjacency_mask(v);
      for (int w = 0; w < n; ++w) {
        if (!((nb >> w) & 1u)) continue;
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? b.left : b.right).labels.push_back(g.label(v));
  return b;
}

namespace {

// Chordless-cycle search: grows a chordless path from a fixed smallest vertex
// s; each appended vertex may be adjacent only to the path tail. A cycle of
// length >= k closes when the tail is also adjacent to s and to nothing else
// on the path.
struct ChordlessSearch {
  const std::vector<std::uint64_t>& adj;
  int n, min_len;
  bool found = false;

  void grow(int s, int tail, std::uint64_t path, int len) {
    if (found) return;
    std::uint64_t cand = adj[static_cast<std::size_t>(tail)] & ~path;
    for (int w = 0; w < n; ++w) {
      if (found) return;
      if (!((cand >> w) & 1u) || w < s) continue;
      std::uint64_t wadj = adj[static_cast<std::size_t>(w)];
      std::uint64_t inner = path & ~(1ull << s);
      // w must see only the tail among internal path vertices
      if ((wadj & inner) != (1ull << tail)) continue;
      bool closes = (wadj >> s) & 1u;
      if (closes && len + 2 >= min_len) {
        found = true;
        return;
      }
      if (!closes) grow(s, w, path | (1ull << w), len + 1);
    }
  }
};

bool has_chordless_cycle_at_least(const std::vector<std::uint64_t>& adj, int n, int k) {
  ChordlessSearch cs{adj, n, k};
  for (int s = 0; s < n && !cs.found; ++s) {
    std::uint64_t nb = adj[static_cast<std::size_t>(s)];
    for (int a = s + 1; a < n && !cs.found; ++a)
      if ((nb >> a) & 1u) cs.grow(s, a, (1ull << s) | (1ull << a), 1);
  }
  return cs.found;
}

}  // namespace

bool is_weakly_chordal(const Graph& g, int vertex_cap) {
  int n = g.vertex_count();
  if (n > vertex_cap)
    throw infeasible_error("is_weakly_chordal: " + std::to_string(n) +
                           " vertices exceeds cap " + std::to_string(vertex_cap));
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n)), cadj(static_cast<std::size_t>(n));
  std::uint64_t full = g.full_mask();
  for (int i = 0; i < n; ++i) {
    adj[static_cast<std::size_t>(i)] = g.adjacency_mask(i);
    cadj[static_cast<std::size_t>(i)] = full & ~adj[static_cast<std::size_t>(i)] & ~(1ull << i);
  }
  return !has_chordless_cycle_at_least(adj, n, 5) && !has_chordless_cycle_at_least(cadj, n, 5);
}

WhiskerSpec make_whisker_spec(const Graph& t, const VertexSet& u, bool allow_general) {
  if (!allow_general && !is_forest(t)) throw error("whisker: base graph is not a forest");
  std::uint64_t m = t.mask_of(u);
  WhiskerSpec spec;
  spec.base = t;
  spec.whiskered = u;
  for (int i = 0; i < t.vertex_count(); ++i) {
    if (!((m >> i) & 1u)) continue;
    std::string w = t.label(i) + "$w";
    if (t.has_vertex(w))
      throw error("whisker label '" + w + "' collides with an existing vertex");
    spec.pairing[t.label(i)] = w;
  }
  return spec;
}

Graph apply_whisker(const WhiskerSpec& spec) {
  std::vector<std::string> verts = spec.base.vertices();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : spec.base.edges()) edges.emplace_back(e.u, e.v);
  for (const auto& v : spec.whiskered.labels) {
    auto it = spec.pairing.find(v);
    if (it == spec.pairing.end()) throw error("whisker spec misses a pairing for '" + v + "'");
    verts.push_back(it->second);
    edges.emplace_back(v, it->second);
  }
  Graph g = Graph::build(std::move(verts), edges);
  if (g.vertex_count() != spec.base.vertex_count() + static_cast<int>(spec.whiskered.size()))
    throw error("whisker spec produced the wrong vertex count");
  for (const auto& [base_v, pendant] : spec.pairing) {
    int p = g.index_of(pendant);
    if (g.degree(p) != 1 || !g.has_edge(base_v, pendant))
      throw error("whisker pendant '" + pendant + "' is not a degree-1 neighbour of '" +
                  base_v + "'");
  }
  return g;
}

Graph whisker(const Graph& t, const VertexSet& u, bool allow_general) {
  return apply_whisker(make_whisker_spec(t, u, allow_general));
}

Graph whisker_all(const Graph& t) { return whisker(t, VertexSet{t.vertices()}); }

Graph bipartite_completion(const Graph& g, const EdgeSet& e) {
  if (e.empty()) throw error("bipartite_completion: edge set must be nonempty");
  auto idx = edge_indices(g, e);
  // connectivity of e viewed as a subgraph on its own support
  std::uint64_t supp = 0;
  for (auto [a, b] : idx) supp |= (1ull << a) | (1ull << b);
  {
    std::uint64_t comp = 1ull << std::countr_zero(supp);
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
    if (comp != supp) throw error("bipartite_completion: edge set is not connected");
  }
  std::uint64_t nbhd = supp;
  for (int i = 0; i < g.vertex_count(); ++i)
    if ((supp >> i) & 1u) nbhd |= g.adjacency_mask(i);
  Graph on = induced_subgraph_mask(g, nbhd);
  auto bip = is_bipartite(on);
  if (!bip) throw error("bipartite_completion: induced neighbourhood subgraph is not bipartite");

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& ed : g.edges()) edges.emplace_back(ed.u, ed.v);
  for (const auto& a : bip->left.labels)
    for (const auto& b : bip->right.labels)
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
  return Graph::build(g.vertices(), edges);
}

std::optional<CMTreeDecomposition> recognize_cm_tree(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  int d = n / 2;

  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) leaves.push_back(v);

  if (n == 2) {
    // P2: both vertices are leaves; the lexicographically smallest one is the core
    int core = g.label(0) < g.label(1) ? 0 : 1;
    CMTreeDecomposition out;
    out.base = Graph::build({g.label(core)}, {});
    out.pairing[g.label(core)] = g.label(1 - core);
    return out;
  }
  if (static_cast<int>(leaves.size()) != d) return std::nullopt;

  std::uint64_t leaf_mask = 0;
  for (int l : leaves) leaf_mask |= 1ull << l;
  std::map<std::string, std::string> pairing;
  for (int l : leaves) {
    int nb = std::countr_zero(g.adjacency_mask(l));
    if ((leaf_mask >> nb) & 1u) return std::nullopt;  // leaf paired to a leaf
    auto [it, fresh] = pairing.emplace(g.label(nb), g.label(l));
    if (!fresh) return std::nullopt;  // base vertex with two pendants
  }
  if (static_cast<int>(pairing.size()) != d) return std::nullopt;
  Graph base = induced_subgraph_mask(g, g.full_mask() & ~leaf_mask);
  if (!is_tree(base)) return std::nullopt;
  return CMTreeDecomposition{std::move(base), std::move(pairing)};
}

LeafCensus leaf_census(const Graph& g) {
  LeafCensus out;
  std::uint64_t leaf_mask = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) {
      out.leaves.labels.push_back(g.label(v));
      leaf_mask |= 1ull << v;
    }
  }
  for (const auto& e : g.edges())
    if (((leaf_mask >> g.index_of(e.u)) & 1u) || ((leaf_mask >> g.index_of(e.v)) & 1u))
      out.leaf_edges.edges.push_back(e);
  out.count = static_cast<int>(out.leaves.size());
  return out;
}

bool is_induced_matching(const Graph& g, const EdgeSet& e) {
  auto idx = edge_indices(g, e);
  std::uint64_t supp = 0;
  for (auto [a, b] : idx) {
    std::uint64_t ab = (1ull << a) | (1ull << b);
    if (supp & ab) return false;  // shared endpoint
    supp |= ab;
  }
  // the induced subgraph on the endpoints must have exactly these edges
  int induced_edges = 0;
  for (int i = 0; i < g.vertex_count(); ++i)
    if ((supp >> i) & 1u) induced_edges += std::popcount(g.adjacency_mask(i) & supp);
  return induced_edges / 2 == static_cast<int>(e.size());
}

std::string tree_canonical_form(const Graph& g) {
  if (!is_tree(g)) throw error("tree_canonical_form: not a tree");
  int n = g.vertex_count();
  if (n == 1) return "()";

  // centre(s) by iterative leaf stripping
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::uint64_t alive = g.full_mask();
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> strip;
    for (int v = 0; v < n; ++v)
      if (((alive >> v) & 1u) && deg[static_cast<std::size_t>(v)] <= 1) strip.push_back(v);
    for (int v : strip) {
      alive &= ~(1ull << v);
      --remaining;
      std::uint64_t nb = g.adjacency_mask(v) & alive;
      for (int w = 0; w < n; ++w)
        if ((nb >> w) & 1u) --deg[static_cast<std::size_t>(w)];
    }
  }

  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    std::uint64_t nb = g.adjacency_mask(v);
    for (int w = 0; w < n; ++w)
      if (((nb >> w) & 1u) && w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };

  std::vector<std::string> roots;
  for (int v = 0; v < n; ++v)
    if ((alive >> v) & 1u) roots.push_back(enc(v, -1));
  std::sort(roots.begin(), roots.end());
  std::string out;
  for (const auto& r : roots) out += r;
  return out;
}

}  // namespace edgedepth
