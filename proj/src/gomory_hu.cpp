#include "flownet/gomory_hu.hpp"

#include <algorithm>
#include <string>

#include "flownet/errors.hpp"

namespace flownet {

GomoryHuTree::GomoryHuTree(int vertex_count, std::vector<TreeEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
  if (static_cast<int>(edges_.size()) != vertex_count_ - 1)
    throw InvalidInstanceError("Gomory-Hu tree needs exactly n-1 edges");
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    incident_[edges_[i].a].push_back(i);
    incident_[edges_[i].b].push_back(i);
  }
}

std::pair<ExtNat, int> GomoryHuTree::min_on_path(int w, int v) const {
  if (w == v) throw InvalidInstanceError("min_on_path: identical endpoints");
  // DFS from w remembering the weakest edge seen so far.
  struct Frame {
    int vertex;
    ExtNat weakest;
    int weakest_index;
  };
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Frame> stack{{w, ExtNat::infinity(), -1}};
  seen[w] = true;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.vertex == v) return {f.weakest, f.weakest_index};
    for (int idx : incident_[f.vertex]) {
      const TreeEdge& te = edges_[idx];
      int other = te.a == f.vertex ? te.b : te.a;
      if (seen[other]) continue;
      seen[other] = true;
      Frame g = f;
      g.vertex = other;
      if (te.kappa < g.weakest) {
        g.weakest = te.kappa;
        g.weakest_index = idx;
      }
      stack.push_back(g);
    }
  }
  throw InvalidInstanceError("min_on_path: vertices not connected in tree");
}

std::vector<int> GomoryHuTree::side_of(int edge_index, int vertex) const {
  std::vector<bool> seen(vertex_count_, false);
  std::vector<int> order{vertex};
  seen[vertex] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int idx : incident_[order[i]]) {
      if (idx == edge_index) continue;
      const TreeEdge& te = edges_[idx];
      int other = te.a == order[i] ? te.b : te.a;
      if (!seen[other]) {
        seen[other] = true;
        order.push_back(other);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

GomoryHuTree gomory_hu(const Multigraph& g, const WeightMap& u, const EdgeMask* active) {
  int n = g.vertex_count();
  std::vector<int> parent(n, 0);
  std::vector<ExtNat> kappa(n, ExtNat(0));

  for (int i = 1; i < n; ++i) {
    int p = parent[i];
    FlowResult fr = max_flow(g, u, i, p, active);
    std::vector<bool> in_side(n, false);
    for (int v : fr.cut.side) in_side[v] = true;  // side contains i

    for (int j = i + 1; j < n; ++j)
      if (in_side[j] && parent[j] == p) parent[j] = i;

    // Gusfield's reparenting step: keeps every tree edge's bipartition an
    // actual minimum cut for its endpoints, not just the right value.
    if (p != 0 && in_side[parent[p]]) {
      parent[i] = parent[p];
      parent[p] = i;
      kappa[i] = kappa[p];
      kappa[p] = fr.value;
    } else {
      kappa[i] = fr.value;
    }
  }

  std::vector<GomoryHuTree::TreeEdge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i < n; ++i) edges.push_back({i, parent[i], kappa[i]});
  return GomoryHuTree(n, std::move(edges));
}

std::vector<CutCoverEntry> cut_cover(const Multigraph& g, const WeightMap& u,
                                     const std::vector<int>& side) {
  if (side.empty() || static_cast<int>(side.size()) >= g.vertex_count())
    throw InvalidInstanceError("cut_cover: side must be a proper nonempty vertex subset");
  std::vector<bool> in_c(g.vertex_count(), false);
  for (int v : side) {
    if (v < 0 || v >= g.vertex_count())
      throw InvalidInstanceError("cut_cover: vertex out of range " + std::to_string(v));
    in_c[v] = true;
  }

  GomoryHuTree tree = gomory_hu(g, u);
  std::vector<CutCoverEntry> cover;
  for (int i = 0; i < static_cast<int>(tree.edges().size()); ++i) {
    const auto& te = tree.edges()[i];
    if (in_c[te.a] == in_c[te.b]) continue;
    int w = in_c[te.a] ? te.a : te.b;  // the endpoint inside C
    int v = in_c[te.a] ? te.b : te.a;
    CutCoverEntry entry;
    entry.vertices = {w, v};
    entry.cut = WeightedCut::from_side(g, u, tree.side_of(i, w));
    cover.push_back(std::move(entry));
  }
  return cover;
}

}  // namespace flownet
