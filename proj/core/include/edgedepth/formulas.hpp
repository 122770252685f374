#pragma once

#include <string>

#include "edgedepth/graph.hpp"
#include "edgedepth/homology.hpp"

namespace edgedepth {

struct CMTreeParams {
  int d = 1;  // dimension = number of base-tree vertices
  int t = 1;  // power
};

struct BMParams {
  int d = 1;
  int j = 1;  // 1 <= j <= d
  int s = 1;  // power
};

struct TwoDropParams {
  int d = 5;  // >= 5
  int a = 2;  // 2 <= a <= d-1
  int t = 1;
};

/// depth S/I(G)^t = max(d - t + 1, 1) for a Cohen-Macaulay tree of
/// dimension d.
int cm_tree_depth_power(const CMTreeParams& p);

/// Upper bound d - t on depth S/I(G)^{t+1} for CM trees, 2 <= t <= d-2.
int cm_tree_upper(int d, int t);

enum class InnerDepthMode {
  oracle,         // homology oracle on I(G[ē])
  cm_structural,  // each component a whisker tree or isolated vertex
};

struct BoundCertificate {
  enum class Kind { upper, lower };
  Kind kind = Kind::upper;
  int value = 0;
  std::string justification;
  // hypothesis record for upper certificates
  bool checked_connected = false;
  bool checked_on_bipartite = false;
  bool checked_off_weakly_chordal = false;
};

/// depth S/I(G)^{t+1} <= 1 + depth R/I(G[ē]) when ē is connected, G[ē] is
/// bipartite and G[ē-bar] is weakly chordal (all three verified; t = |ē|).
/// An edgeless G[ē-bar] contributes depth |V(G[ē-bar])|.
BoundCertificate upper_bound_completion(const Graph& g, const EdgeSet& e, const FieldSpec& f,
                                        InnerDepthMode mode = InnerDepthMode::oracle,
                                        const DepthOptions& opts = {});

/// depth R/I(G)^t >= max(|U| - t + 1, 1) for the forest G obtained from T by
/// whiskering every vertex of U (the floor 1 because forests have positive
/// depth at every power).
BoundCertificate whisker_lower_bound(const Graph& t, const VertexSet& u, int power);

/// Bipartite graph on {x1..xd, y1..yd} with edges {x_i y_i}, {x_1 y_i} and
/// {x_k y_j : k <= j}.
Graph bm_graph(int d, int j);

struct BmDepth {
  int value = 0;
  std::string provenance;  // "theorem" for s >= 2, "cm-baseline" for s = 1
};
/// max(1, d - j - s + 3) for s >= 2; s = 1 returns d tagged "cm-baseline"
/// (the family is Cohen-Macaulay).  Note: for j = 1 the family degenerates
/// to the whisker graph of a star, whose true power depths follow
/// cm_tree_depth_power and undercut this closed form by one; the campaign
/// reports those disagreements.
BmDepth bm_depth(const BMParams& p);

/// Bipartite graph on {x1..xd, y1..yd} with edges x1 joined to every y,
/// {x_i y_j : 2 <= i <= j <= a} and {x_i y_j : a+1 <= i <= j <= d}.
Graph two_drop_graph(int d, int a);

/// d at t = 1, min(a, d-a+1) at t = 2, and 1 for t >= 3.
int two_drop_depth(const TwoDropParams& p);

/// Depth stabilization index of a tree: |V| - (number of leaves).
int dstab_tree(const Graph& g);

}  // namespace edgedepth
