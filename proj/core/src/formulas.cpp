#include "edgedepth/formulas.hpp"

#include <algorithm>

namespace edgedepth {

int cm_tree_depth_power(const CMTreeParams& p) {
  if (p.d < 1 || p.t < 1) throw error("cm_tree_depth_power: d and t must be >= 1");
  return std::max(p.d - p.t + 1, 1);
}

int cm_tree_upper(int d, int t) {
  if (t < 2 || t > d - 2)
    throw error("cm_tree_upper: requires 2 <= t <= d-2, got t=" + std::to_string(t) +
                ", d=" + std::to_string(d));
  return d - t;
}

namespace {

// depth of R/I(H) for H a disjoint union of whisker trees and isolated
// vertices: the whisker-tree components are Cohen-Macaulay of dimension
// |base| and the isolated vertices are free.
int structural_cm_depth(const Graph& h) {
  int depth = 0;
  for (const Graph& comp : connected_components(h)) {
    if (comp.vertex_count() == 1) {
      depth += 1;
      continue;
    }
    auto dec = recognize_cm_tree(comp);
    if (!dec)
      throw error("structural inner depth: component on " +
                  std::to_string(comp.vertex_count()) +
                  " vertices is not a whisker tree");
    depth += dec->base.vertex_count();
  }
  return depth;
}

}  // namespace

BoundCertificate upper_bound_completion(const Graph& g, const EdgeSet& e, const FieldSpec& f,
                                        InnerDepthMode mode, const DepthOptions& opts) {
  if (e.empty()) throw error("upper_bound_completion: edge set must be nonempty");
  BoundCertificate cert;
  cert.kind = BoundCertificate::Kind::upper;

  auto idx = edge_indices(g, e);
  // connectivity of ē as a subgraph
  std::uint64_t supp = 0;
  for (auto [a, b] : idx) supp |= (1ull << a) | (1ull << b);
  {
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
    if (comp != supp)
      throw error("upper_bound_completion: hypothesis failed: ē is not connected");
  }
  cert.checked_connected = true;

  NeighborhoodSplit split = edge_neighborhood_split(g, e);
  if (!is_bipartite(split.on))
    throw error("upper_bound_completion: hypothesis failed: G[ē] is not bipartite");
  cert.checked_on_bipartite = true;
  if (!is_weakly_chordal(split.off))
    throw error("upper_bound_completion: hypothesis failed: G[ē-bar] is not weakly chordal");
  cert.checked_off_weakly_chordal = true;

  int inner;
  if (split.off.edge_count() == 0) {
    inner = split.off.vertex_count();  // zero ideal: depth R/K = |V(G[ē-bar])|
  } else if (mode == InnerDepthMode::cm_structural) {
    inner = structural_cm_depth(split.off);
  } else {
    inner = depth(edge_ideal(split.off), f, opts).depth;
  }
  cert.value = 1 + inner;
  cert.justification = "depth S/I(G)^" + std::to_string(e.size() + 1) +
                       " <= 1 + depth R/I(G[ē-bar]) with |ē| = " + std::to_string(e.size());
  return cert;
}

BoundCertificate whisker_lower_bound(const Graph& t, const VertexSet& u, int power) {
  if (!is_forest(t)) throw error("whisker_lower_bound: base graph is not a forest");
  if (power < 1) throw error("whisker_lower_bound: power must be >= 1");
  t.mask_of(u);  // validates membership
  BoundCertificate cert;
  cert.kind = BoundCertificate::Kind::lower;
  cert.value = std::max(static_cast<int>(u.size()) - power + 1, 1);
  cert.justification = "depth R/I(G)^t >= |U| - t + 1 with |U| = " + std::to_string(u.size()) +
                       ", t = " + std::to_string(power) + " (forest floor 1)";
  return cert;
}

Graph bm_graph(int d, int j) {
  if (d < 1 || j < 1 || j > d)
    throw error("bm_graph: requires 1 <= j <= d");
  std::vector<std::string> verts;
  for (int i = 1; i <= d; ++i) verts.push_back("x" + std::to_string(i));
  for (int i = 1; i <= d; ++i) verts.push_back("y" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  auto push = [&](int xi, int yi) {
    auto e = std::make_pair("x" + std::to_string(xi), "y" + std::to_string(yi));
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (int i = 1; i <= d; ++i) push(i, i);
  for (int i = 1; i <= d; ++i) push(1, i);
  for (int k = 1; k <= j; ++k) push(k, j);
  return Graph::build(std::move(verts), edges);
}

BmDepth bm_depth(const BMParams& p) {
  if (p.d < 1 || p.j < 1 || p.j > p.d || p.s < 1)
    throw error("bm_depth: requires 1 <= j <= d and s >= 1");
  if (p.s == 1) return BmDepth{p.d, "cm-baseline"};
  return BmDepth{std::max(1, p.d - p.j - p.s + 3), "theorem"};
}

Graph two_drop_graph(int d, int a) {
  if (d < 5) throw error("two_drop_graph: requires d >= 5");
  if (a < 2 || a > d - 1) throw error("two_drop_graph: requires 2 <= a <= d-1");
  std::vector<std::string> verts;
  for (int i = 1; i <= d; ++i) verts.push_back("x" + std::to_string(i));
  for (int i = 1; i <= d; ++i) verts.push_back("y" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  auto push = [&](int xi, int yi) {
    auto e = std::make_pair("x" + std::to_string(xi), "y" + std::to_string(yi));
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (int l = 1; l <= d; ++l) push(1, l);
  for (int i = 2; i <= a; ++i)
    for (int jj = i; jj <= a; ++jj) push(i, jj);
  for (int i = a + 1; i <= d; ++i)
    for (int jj = i; jj <= d; ++jj) push(i, jj);
  return Graph::build(std::move(verts), edges);
}

int two_drop_depth(const TwoDropParams& p) {
  if (p.d < 5 || p.a < 2 || p.a > p.d - 1 || p.t < 1)
    throw error("two_drop_depth: invalid parameters");
  if (p.t == 1) return p.d;
  if (p.t == 2) return std::min(p.a, p.d - p.a + 1);
  return 1;
}

int dstab_tree(const Graph& g) {
  if (!is_tree(g)) throw error("dstab_tree: graph is not a tree");
  return g.vertex_count() - leaf_census(g).count;
}

}  // namespace edgedepth
