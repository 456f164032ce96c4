#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flownet/ext_nat.hpp"

namespace flownet {

using EdgeId = int;

/// Edge weight map, indexed by edge id. Sized by Multigraph::edge_id_bound()
/// of the graph it belongs to, so it stays valid across edge-subset views
/// and contractions (edge ids are never renumbered).
using WeightMap = std::vector<ExtNat>;

/// Marks which edge ids participate in an operation; sized by edge_id_bound().
using EdgeMask = std::vector<bool>;

/// An undirected multigraph with stable integer edge ids.
///
/// Parallel edges are allowed, self-loops are rejected. Edge ids are
/// assigned densely on construction and never renumbered afterwards:
/// subgraph views and contractions keep the original ids, so id-indexed
/// weight maps remain valid across them. Instances are immutable once
/// built (add_edge is the only mutator) and safe to share across threads.
class Multigraph {
 public:
  explicit Multigraph(int vertex_count);

  /// Adds an edge and returns its id. Throws InvalidInstanceError on
  /// self-loops or out-of-range endpoints.
  EdgeId add_edge(int a, int b);

  int vertex_count() const { return vertex_count_; }
  /// Number of present edges.
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }
  /// One past the largest edge id ever assigned; weight maps use this size.
  int edge_id_bound() const { return static_cast<int>(endpoints_.size()); }

  bool contains_edge(EdgeId e) const {
    return e >= 0 && e < edge_id_bound() && present_[e];
  }
  /// Endpoints of a present edge.
  std::pair<int, int> endpoints(EdgeId e) const;

  /// Present edge ids in ascending order.
  const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }

  /// The same graph with the given edges removed. Surviving edges keep
  /// their ids. Unknown or absent ids throw.
  Multigraph without_edges(const std::vector<EdgeId>& removed) const;

 private:
  friend struct Contraction;
  friend Contraction contract_pairs(const Multigraph&, const std::vector<std::pair<int, int>>&);

  Multigraph() : vertex_count_(0) {}

  int vertex_count_;
  std::vector<std::pair<int, int>> endpoints_;  // indexed by edge id
  std::vector<bool> present_;
  std::vector<EdgeId> edge_ids_;
};

/// A vertex cut together with its crossing edges and their total weight.
/// `side` is one shore of the bipartition; `edge_ids` is exactly the set
/// of present edges with one endpoint in `side`.
struct WeightedCut {
  std::vector<int> side;         // sorted
  std::vector<EdgeId> edge_ids;  // sorted
  ExtNat weight;

  /// Builds the cut induced by `side`, recomputing the crossing edges and
  /// summing `w` over them. Only edges marked in `active` participate;
  /// pass nullptr for all present edges.
  static WeightedCut from_side(const Multigraph& g, const WeightMap& w, std::vector<int> side,
                               const EdgeMask* active = nullptr);
};

/// Result of contracting vertex pairs: the contracted graph (surviving
/// edges keep their original ids) and the old-vertex -> new-vertex map.
struct Contraction {
  Multigraph graph;
  std::vector<int> vertex_map;
};

/// Contracts the union-find closure of `pairs`. Edges whose endpoints end
/// up merged are dropped; every other edge survives, as a parallel edge
/// where applicable, under its original id. New vertex ids are assigned by
/// ascending smallest original member, so the result is deterministic.
Contraction contract_pairs(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs);

}  // namespace flownet
