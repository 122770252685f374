#pragma once

#include <string>
#include <vector>

#include "edgedepth/graph.hpp"

namespace edgedepth {

/// Complete bipartite subgraph of a host graph: every pair across (a, b) is
/// an edge of the host (the subgraph need not be induced).
struct CompleteBipartiteSubgraph {
  VertexSet a, b;
};

/// Family B_1..B_g with pairwise disjoint vertex sets and an induced
/// matching e_1..e_g of the host, e_i an edge of B_i.
struct StronglyDisjointFamily {
  std::vector<CompleteBipartiteSubgraph> blocks;
  EdgeSet certificates;
};

struct KimuraResult {
  int value = 0;  // sum |V(B_i)| - g for the witness
  StronglyDisjointFamily witness;
};

/// Checks the three conditions: completeness across parts, pairwise vertex
/// disjointness, and the induced-matching certificate (e_i in E(B_i)).
bool verify_strongly_disjoint(const Graph& g, const StronglyDisjointFamily& fam);

struct KimuraOptions {
  int vertex_cap = 14;
};

/// Exact d(G) = max over strongly disjoint families of sum |V(B_i)| - g,
/// with a verified witness.  Deterministic: ties are broken by the
/// lexicographically smallest (certificate edges, block vertex lists)
/// encoding.  Exhaustive search; requires at least one edge.
KimuraResult kimura_d(const Graph& g, const KimuraOptions& opts = {});

/// pd(S/I(G)) = d(G) for weakly chordal graphs with at least one edge;
/// throws if the hypothesis fails.  For general graphs d(G) is only a
/// lower bound on pd; use kimura_d directly for that reading.
int pd_weakly_chordal(const Graph& g, const KimuraOptions& opts = {});

std::string witness_to_json_string(const StronglyDisjointFamily& fam);

}  // namespace edgedepth
