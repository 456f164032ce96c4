#include "flownet/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flownet/errors.hpp"

namespace flownet {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count <= 0)
    throw InvalidInstanceError("multigraph needs a positive vertex count");
}

EdgeId Multigraph::add_edge(int a, int b) {
  if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
    throw InvalidInstanceError("edge endpoint out of range: (" + std::to_string(a) + ", " +
                               std::to_string(b) + ")");
  if (a == b) throw InvalidInstanceError("self-loop rejected at vertex " + std::to_string(a));
  EdgeId id = static_cast<EdgeId>(endpoints_.size());
  endpoints_.emplace_back(a, b);
  present_.push_back(true);
  edge_ids_.push_back(id);
  return id;
}

std::pair<int, int> Multigraph::endpoints(EdgeId e) const {
  if (!contains_edge(e))
    throw InvalidInstanceError("unknown edge id " + std::to_string(e));
  return endpoints_[e];
}

Multigraph Multigraph::without_edges(const std::vector<EdgeId>& removed) const {
  Multigraph out = *this;
  for (EdgeId e : removed) {
    if (!out.contains_edge(e))
      throw InvalidInstanceError("cannot remove unknown edge id " + std::to_string(e));
    out.present_[e] = false;
  }
  out.edge_ids_.clear();
  for (EdgeId e = 0; e < out.edge_id_bound(); ++e)
    if (out.present_[e]) out.edge_ids_.push_back(e);
  return out;
}

WeightedCut WeightedCut::from_side(const Multigraph& g, const WeightMap& w, std::vector<int> side,
                                   const EdgeMask* active) {
  std::sort(side.begin(), side.end());
  std::vector<bool> in_side(g.vertex_count(), false);
  for (int v : side) in_side[v] = true;
  WeightedCut cut;
  cut.side = std::move(side);
  cut.weight = 0;
  for (EdgeId e : g.edge_ids()) {
    if (active && !(*active)[e]) continue;
    auto [a, b] = g.endpoints(e);
    if (in_side[a] != in_side[b]) {
      cut.edge_ids.push_back(e);
      cut.weight += w[e];
    }
  }
  return cut;
}

namespace {

int uf_find(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Contraction contract_pairs(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
      throw InvalidInstanceError("contract_pairs: vertex out of range");
    int ra = uf_find(parent, a), rb = uf_find(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  // New ids ordered by smallest original member of each class.
  Contraction out;
  out.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = uf_find(parent, v);
    if (out.vertex_map[r] < 0) out.vertex_map[r] = next++;
    out.vertex_map[v] = out.vertex_map[r];
  }

  out.graph.vertex_count_ = next;
  out.graph.endpoints_.assign(g.edge_id_bound(), {0, 0});
  out.graph.present_.assign(g.edge_id_bound(), false);
  for (EdgeId e : g.edge_ids()) {
    auto [a, b] = g.endpoints(e);
    int ma = out.vertex_map[a], mb = out.vertex_map[b];
    if (ma == mb) continue;  // merged endpoints: edge dropped
    out.graph.endpoints_[e] = {ma, mb};
    out.graph.present_[e] = true;
    out.graph.edge_ids_.push_back(e);
  }
  return out;
}

}  // namespace flownet
