#include "flownet/max_flow.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "flownet/errors.hpp"

namespace flownet {

namespace {

// Dinic over an arc list. Undirected edge {a,b} of capacity u becomes the
// arc pair a->b / b->a, each with residual u and each the other's reverse;
// that admits net flow up to u in either direction.
struct DinicSolver {
  int n;
  std::vector<int> head;        // per vertex: first arc index or -1
  std::vector<int> next_arc;    // per arc
  std::vector<int> to;          // per arc
  std::vector<std::uint64_t> residual;
  std::vector<EdgeId> arc_edge;  // originating edge id (same for both arcs)
  std::vector<int> level, iter;

  explicit DinicSolver(int vertices) : n(vertices), head(vertices, -1) {}

  void add_undirected(int a, int b, std::uint64_t cap, EdgeId id) {
    add_arc(a, b, cap, id);
    add_arc(b, a, cap, id);
  }

  void add_arc(int a, int b, std::uint64_t cap, EdgeId id) {
    next_arc.push_back(head[a]);
    head[a] = static_cast<int>(to.size());
    to.push_back(b);
    residual.push_back(cap);
    arc_edge.push_back(id);
  }

  bool bfs(int s, int t) {
    level.assign(n, -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head[v]; a != -1; a = next_arc[a]) {
        if (residual[a] > 0 && level[to[a]] < 0) {
          level[to[a]] = level[v] + 1;
          q.push(to[a]);
        }
      }
    }
    return level[t] >= 0;
  }

  std::uint64_t dfs(int v, int t, std::uint64_t limit) {
    if (v == t) return limit;
    for (int& a = iter[v]; a != -1; a = next_arc[a]) {
      int w = to[a];
      if (residual[a] == 0 || level[w] != level[v] + 1) continue;
      std::uint64_t pushed = dfs(w, t, std::min(limit, residual[a]));
      if (pushed > 0) {
        residual[a] -= pushed;
        residual[a ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::uint64_t run(int s, int t) {
    std::uint64_t flow = 0;
    while (bfs(s, t)) {
      iter = head;
      while (std::uint64_t pushed = dfs(s, t, UINT64_MAX)) flow += pushed;
    }
    return flow;
  }

  std::vector<int> residual_reachable(int s) const {
    std::vector<bool> seen(n, false);
    std::vector<int> order{s};
    seen[s] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int a = head[order[i]]; a != -1; a = next_arc[a]) {
        if (residual[a] > 0 && !seen[to[a]]) {
          seen[to[a]] = true;
          order.push_back(to[a]);
        }
      }
    }
    return order;
  }
};

bool infinite_path_exists(const Multigraph& g, const WeightMap& u, int s, int t,
                          const EdgeMask* active) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (EdgeId e : g.edge_ids()) {
    if (active && !(*active)[e]) continue;
    if (!u[e].is_infinite()) continue;
    auto [a, b] = g.endpoints(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

FlowResult max_flow(const Multigraph& g, const WeightMap& u, int s, int t,
                    const EdgeMask* active) {
  if (s == t) throw InvalidInstanceError("max_flow: s == t");
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    throw InvalidInstanceError("max_flow: terminal out of range");
  if (static_cast<int>(u.size()) < g.edge_id_bound())
    throw InvalidInstanceError("max_flow: capacity map smaller than edge id bound");

  bool infinite = infinite_path_exists(g, u, s, t, active);

  // Substitute infinity by one more than the total finite capacity; when no
  // all-infinite s-t path exists this cannot change the maximum flow.
  std::uint64_t finite_sum = 0;
  for (EdgeId e : g.edge_ids()) {
    if (active && !(*active)[e]) continue;
    if (u[e].is_finite()) finite_sum += u[e].value();
  }
  std::uint64_t big = finite_sum + 1;

  DinicSolver solver(g.vertex_count());
  for (EdgeId e : g.edge_ids()) {
    if (active && !(*active)[e]) continue;
    auto [a, b] = g.endpoints(e);
    solver.add_undirected(a, b, u[e].is_infinite() ? big : u[e].value(), e);
  }

  std::uint64_t flow = solver.run(s, t);

  FlowResult result;
  result.value = infinite ? ExtNat::infinity() : ExtNat(flow);
  result.cut = WeightedCut::from_side(g, u, solver.residual_reachable(s), active);
  return result;
}

WeightedCut min_weight_st_cut(const Multigraph& g, const WeightMap& w, int s, int t,
                              const EdgeMask* active) {
  return max_flow(g, w, s, t, active).cut;
}

}  // namespace flownet
