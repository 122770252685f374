#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgedepth/errors.hpp"

namespace edgedepth {

/// Unordered vertex pair. Canonical form keeps endpoints in lexicographic
/// label order so edge sets compare deterministically.
struct Edge {
  std::string u, v;
  Edge() = default;
  Edge(std::string a, std::string b);
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
};

struct VertexSet {
  std::vector<std::string> labels;  // distinct, insertion order preserved
  bool contains(const std::string& l) const;
  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
};

struct EdgeSet {
  std::vector<Edge> edges;  // distinct
  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

struct Bipartition {
  VertexSet left, right;
};

/// Finite simple graph with named vertices. Immutable after construction;
/// all "modifying" operations return new graphs. At most 64 vertices
/// (adjacency is kept as per-vertex bitmasks).
class Graph {
 public:
  Graph() = default;

  /// Builds from explicit vertex order and edges. Rejects loops, duplicate
  /// edges, undeclared endpoints, duplicate vertex labels.
  static Graph build(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  bool has_vertex(const std::string& l) const { return index_.count(l) != 0; }
  /// Index of a label; throws if absent.
  int index_of(const std::string& l) const;

  bool has_edge(int a, int b) const { return a != b && (adj_[static_cast<std::size_t>(a)] >> b) & 1u; }
  bool has_edge(const std::string& a, const std::string& b) const;
  std::uint64_t adjacency_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;

  /// Edges as canonical label pairs, sorted.
  std::vector<Edge> edges() const { return edges_; }

  /// Label-set and edge-set equality, order-independent.
  bool operator==(const Graph& o) const;

  // index-mask helpers used across the library
  std::uint64_t full_mask() const;
  std::uint64_t mask_of(const VertexSet& s) const;          // validates membership
  std::vector<std::string> labels_of(std::uint64_t mask) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
};

/// Parses the edge-list text format: one edge per line as "<u> <v>", a line
/// with a single token declares an isolated vertex, '#' starts a comment,
/// blank lines ignored.
Graph parse_graph(const std::string& text);
std::string to_edge_list(const Graph& g);

/// N[S] = union of closed neighbourhoods of the vertices of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Validates that every element of e is an edge of g; returns index pairs.
std::vector<std::pair<int, int>> edge_indices(const Graph& g, const EdgeSet& e);

struct NeighborhoodSplit {
  Graph on;   // induced subgraph on N[e]
  Graph off;  // induced subgraph on V(G) \ N[e]
};
NeighborhoodSplit edge_neighborhood_split(const Graph& g, const EdgeSet& e);

Graph induced_subgraph(const Graph& g, const VertexSet& u);
Graph induced_subgraph_mask(const Graph& g, std::uint64_t mask);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

/// Bipartition if no odd cycle exists; otherwise nullopt. Disconnected
/// graphs get the componentwise colouring with each component root on the
/// left side.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// True iff neither g nor its complement has an induced (chordless) cycle of
/// length >= 5. Exhaustive chordless-path search; refuses above the cap.
bool is_weakly_chordal(const Graph& g, int vertex_cap = 16);

struct WhiskerSpec {
  Graph base;
  VertexSet whiskered;
  std::map<std::string, std::string> pairing;  // base vertex -> whisker label
};

/// Plans pendant labels "<v>$w" for each vertex of u. Requires a forest
/// unless allow_general; throws on label collisions.
WhiskerSpec make_whisker_spec(const Graph& t, const VertexSet& u, bool allow_general = false);

/// Builds the whisker graph and checks it: |V(T)| + |U| vertices, every
/// generated label of degree 1 with its base vertex as unique neighbour.
Graph apply_whisker(const WhiskerSpec& spec);

/// make_whisker_spec + apply_whisker.
Graph whisker(const Graph& t, const VertexSet& u, bool allow_general = false);

/// The whisker graph over all vertices of t (the Cohen-Macaulay tree built
/// on base tree t).
Graph whisker_all(const Graph& t);

/// Adds every cross pair of the bipartition of the induced subgraph on N[e].
/// Requires e connected as a subgraph and that induced subgraph bipartite.
Graph bipartite_completion(const Graph& g, const EdgeSet& e);

struct CMTreeDecomposition {
  Graph base;                                  // tree T with G = whisker(T, V(T))
  std::map<std::string, std::string> pairing;  // base vertex -> its pendant
};

/// Present iff g is a tree expressible as the whisker graph of a tree.
std::optional<CMTreeDecomposition> recognize_cm_tree(const Graph& g);

struct LeafCensus {
  VertexSet leaves;
  EdgeSet leaf_edges;
  int count = 0;  // epsilon_0
};
LeafCensus leaf_census(const Graph& g);

bool is_induced_matching(const Graph& g, const EdgeSet& e);

/// AHU canonical form; equal strings iff the trees are isomorphic.
/// Throws if g is not a tree.
std::string tree_canonical_form(const Graph& g);

}  // namespace edgedepth
