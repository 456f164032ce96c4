#pragma once

#include <cstdint>
#include <vector>

#include "flownet/max_flow.hpp"
#include "flownet/multigraph.hpp"

namespace flownet {

/// A Network Flow Interdiction instance: remove edges R with total cost
/// c(R) <= budget so that the maximum s-t-flow of what remains is as small
/// as possible. The same data also serves Budgeted Minimum s-t-Cut, where
/// the goal is the cheapest-capacity s-t-cut whose removal cost fits the
/// budget.
struct NfiInstance {
  Multigraph graph;
  WeightMap capacity;  // u, indexed by edge id
  WeightMap cost;      // c, indexed by edge id
  int s = 0;
  int t = 1;
  std::uint64_t budget = 0;

  /// Checks s != t, map sizes, and terminal range; throws on violation.
  void validate() const;
};

/// An interdiction set with its evaluated cost and residual flow.
struct InterdictionSolution {
  std::vector<EdgeId> removed;  // sorted
  ExtNat cost;
  ExtNat residual;
  bool budget_feasible = false;
};

/// Evaluates an arbitrary removal set: cost, residual max flow on the
/// edge-subset view, and budget feasibility. Over-budget sets are reported,
/// not rejected. Unknown edge ids throw.
InterdictionSolution evaluate(const NfiInstance& instance, const std::vector<EdgeId>& removed);

/// The (1 + 1/k)(n-1)-approximation algorithm (k = 1 gives the 2(n-1)
/// guarantee). Sweeps a prefix of the efficiency ordering and a capacity
/// guess, builds a Gomory-Hu tree of the low-efficiency part, and for each
/// tree-weight threshold contracts the strongly connected pairs and takes
/// a minimum-cost s-t-cut of the rest; the best budget-feasible candidate
/// wins. Includes the empty-prefix sweep so an affordable minimum-cost cut
/// yields residual 0. Deterministic: ties broken by residual, then cost,
/// then lexicographic edge ids. Honors FLOWNET_THREADS for parallelism.
InterdictionSolution nfi_approx(const NfiInstance& instance, int k = 1);

/// Exact solver enumerating all s-t-cuts and attacking each with an exact
/// knapsack over its edges. Guard: n <= 20.
InterdictionSolution nfi_exact_cutwise(const NfiInstance& instance);

/// Exact solver enumerating every budget-feasible removal set directly.
/// Guard: m <= 16. Independent of the cutwise route.
InterdictionSolution nfi_exact_subsets(const NfiInstance& instance);

/// Budgeted Minimum s-t-Cut by enumeration: the minimum-capacity s-t-cut
/// whose edge-removal cost is within budget. Guard: n <= 20; throws
/// InfeasibleError when no cut is affordable.
WeightedCut bmstc_exact(const NfiInstance& instance);

}  // namespace flownet
