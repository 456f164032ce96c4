#pragma once

#include <utility>
#include <vector>

#include "flownet/max_flow.hpp"
#include "flownet/multigraph.hpp"

namespace flownet {

/// A Gomory-Hu tree: a spanning tree on the source graph's vertices whose
/// edge weights kappa encode every pairwise minimum cut. For any pair
/// (w, v), the minimum kappa on the unique w-v tree path equals the
/// minimum w-v-cut capacity, and deleting that tree edge yields a vertex
/// bipartition that is a minimum w-v-cut.
class GomoryHuTree {
 public:
  struct TreeEdge {
    int a, b;
    ExtNat kappa;
  };

  GomoryHuTree(int vertex_count, std::vector<TreeEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  /// Minimum kappa on the tree path between w and v, with the index of a
  /// tree edge attaining it (the one closest to w on ties).
  std::pair<ExtNat, int> min_on_path(int w, int v) const;

  /// The vertex set of the component containing `vertex` after deleting
  /// tree edge `edge_index`; sorted.
  std::vector<int> side_of(int edge_index, int vertex) const;

 private:
  int vertex_count_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<int>> incident_;  // vertex -> tree edge indices
};

/// Builds a Gomory-Hu tree with n-1 max-flow calls (Gusfield's variant: no
/// graph contraction between calls). Disconnected graphs are allowed; their
/// components end up joined by kappa = 0 tree edges.
GomoryHuTree gomory_hu(const Multigraph& g, const WeightMap& u, const EdgeMask* active = nullptr);

/// One entry of a cut cover: a vertex pair and a minimum cut separating it.
struct CutCoverEntry {
  std::pair<int, int> vertices;  // first endpoint lies in the covered set C
  WeightedCut cut;
};

/// Covers delta(C) by at most n-1 pairwise minimum cuts: takes the tree
/// edges of a Gomory-Hu tree crossing C and, for each, the cut obtained by
/// deleting it from the tree. The union of the returned cuts' edge sets
/// contains every edge of delta(C).
std::vector<CutCoverEntry> cut_cover(const Multigraph& g, const WeightMap& u,
                                     const std::vector<int>& side);

}  // namespace flownet
