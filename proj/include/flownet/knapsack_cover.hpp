#pragma once

#include <cstdint>
#include <vector>

namespace flownet {

/// One Knapsack Cover item: pick a set S minimizing total value subject to
/// cost(S) >= threshold.
struct KnapsackCoverItem {
  std::uint64_t value;
  std::uint64_t cost;
};

struct KnapsackCoverInstance {
  std::vector<KnapsackCoverItem> items;
  std::uint64_t threshold;  // B'

  bool feasible() const;
};

/// Greedy (1 + 1/k)-approximation. For k = 1 this is the classic
/// 2-approximation: guess the highest-value element of an optimal
/// solution, discard every other item at least as large, then fill with
/// the remaining items by lowest efficiency (value/cost) until covered.
/// For k > 1 the guess is the k highest-value elements. Value ties are
/// broken by item index throughout so the guess step stays well defined.
/// Returns sorted item indices; throws InfeasibleError when no subset
/// reaches the threshold.
std::vector<int> knapsack_cover_greedy(const KnapsackCoverInstance& kc, int guesses);

/// Exact minimum-value cover by dynamic programming over the cost
/// dimension 0..threshold (item costs capped at the threshold). Returns
/// sorted item indices; throws InfeasibleError when infeasible.
std::vector<int> knapsack_cover_exact(const KnapsackCoverInstance& kc);

}  // namespace flownet
