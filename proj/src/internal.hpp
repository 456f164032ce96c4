#pragma once

// Helpers shared between the solver translation units. Not installed.

#include <cstdint>
#include <functional>
#include <vector>

#include "flownet/interdiction.hpp"
#include "flownet/multigraph.hpp"

namespace flownet::internal {

/// Instance normalization shared by the search-based solvers:
///  - zero-capacity edges are dropped outright (never worth interdicting),
///  - zero-cost edges among the rest are removed for free and re-appended
///    to every returned solution,
///  - infinite (and over-budget) costs are capped at budget+1, which keeps
///    all cost arithmetic finite without changing feasibility.
struct Preprocessed {
  std::vector<EdgeId> free_removed;  // sorted
  std::vector<EdgeId> working;       // sorted by id
  EdgeMask working_mask;
  WeightMap capped_cost;             // finite, <= budget+1, indexed by edge id
  std::vector<EdgeId> order;         // working edges by ascending (efficiency, id)
  std::vector<int> label;            // edge id -> rank in `order`, -1 otherwise
};

Preprocessed preprocess(const NfiInstance& instance);

/// Deduplicates candidate removal sets, appends the free removals, scores
/// every candidate by an independent evaluation, and picks the winner by
/// (residual, cost, lexicographic edge ids). The empty candidate is always
/// included, so a solution exists for every budget.
InterdictionSolution select_best(const NfiInstance& instance,
                                 const std::vector<std::vector<EdgeId>>& candidates,
                                 const std::vector<EdgeId>& free_removed);

/// Visits every subset of {0..m-1} with size <= max_size, the empty set
/// included, in lexicographic order of the index sequence.
void for_each_subset_upto(int m, int max_size,
                          const std::function<void(const std::vector<int>&)>& visit);

}  // namespace flownet::internal
