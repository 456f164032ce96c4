#include "flownet/knapsack_cover.hpp"

#include <algorithm>
#include <limits>

#include "flownet/errors.hpp"

namespace flownet {

namespace {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

// Total order on items by (value, index); makes "guess the highest-value
// elements" well defined under value ties.
bool item_less(const KnapsackCoverInstance& kc, int a, int b) {
  if (kc.items[a].value != kc.items[b].value) return kc.items[a].value < kc.items[b].value;
  return a < b;
}

// efficiency(a) < efficiency(b), i.e. value/cost compared exactly; ties by index.
bool efficiency_less(const KnapsackCoverInstance& kc, int a, int b) {
  unsigned __int128 lhs = static_cast<unsigned __int128>(kc.items[a].value) * kc.items[b].cost;
  unsigned __int128 rhs = static_cast<unsigned __int128>(kc.items[b].value) * kc.items[a].cost;
  if (lhs != rhs) return lhs < rhs;
  return a < b;
}

void enumerate_subsets(int m, int max_size, std::vector<int>& current, int first,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (!current.empty()) visit(current);
  if (static_cast<int>(current.size()) == max_size) return;
  for (int i = first; i < m; ++i) {
    current.push_back(i);
    enumerate_subsets(m, max_size, current, i + 1, visit);
    current.pop_back();
  }
}

}  // namespace

bool KnapsackCoverInstance::feasible() const {
  std::uint64_t total = 0;
  for (const auto& item : items) {
    if (item.cost > kUnreached - total) return true;  // saturates far above any threshold
    total += item.cost;
  }
  return total >= threshold;
}

std::vector<int> knapsack_cover_greedy(const KnapsackCoverInstance& kc, int guesses) {
  if (guesses < 1) throw InvalidInstanceError("knapsack_cover_greedy: guesses must be >= 1");
  if (kc.threshold == 0) return {};
  if (!kc.feasible()) throw InfeasibleError("knapsack cover: total cost below threshold");

  int m = static_cast<int>(kc.items.size());
  std::uint64_t best_value = kUnreached;
  std::vector<int> best_set;

  auto consider = [&](std::vector<int> set, std::uint64_t value) {
    std::sort(set.begin(), set.end());
    if (value < best_value || (value == best_value && set < best_set)) {
      best_value = value;
      best_set = std::move(set);
    }
  };

  auto try_guess = [&](const std::vector<int>& guess) {
    // guess = conjectured highest-value elements of an optimal solution;
    // its minimum bounds every other usable item from above.
    int pivot = guess[0];
    for (int i : guess)
      if (item_less(kc, i, pivot)) pivot = i;

    std::vector<bool> in_guess(m, false);
    std::uint64_t cost = 0, value = 0;
    for (int i : guess) {
      in_guess[i] = true;
      cost += kc.items[i].cost;
      value += kc.items[i].value;
    }

    std::vector<int> pool;
    for (int i = 0; i < m; ++i)
      if (!in_guess[i] && kc.items[i].cost > 0 && item_less(kc, i, pivot)) pool.push_back(i);
    std::sort(pool.begin(), pool.end(),
              [&](int a, int b) { return efficiency_less(kc, a, b); });

    std::vector<int> set = guess;
    for (std::size_t i = 0; cost < kc.threshold && i < pool.size(); ++i) {
      set.push_back(pool[i]);
      cost += kc.items[pool[i]].cost;
      value += kc.items[pool[i]].value;
    }
    if (cost >= kc.threshold) consider(std::move(set), value);
  };

  std::vector<int> current;
  enumerate_subsets(m, std::min(guesses, m), current, 0, try_guess);

  if (best_value == kUnreached)
    throw InfeasibleError("knapsack cover: no guess produced a cover");  // unreachable if feasible
  return best_set;
}

std::vector<int> knapsack_cover_exact(const KnapsackCoverInstance& kc) {
  if (kc.threshold == 0) return {};
  if (!kc.feasible()) throw InfeasibleError("knapsack cover: total cost below threshold");

  int m = static_cast<int>(kc.items.size());
  std::uint64_t bp = kc.threshold;
  if ((static_cast<std::uint64_t>(m) + 1) * (bp + 1) > (1ull << 27))
    throw SizeGuardError("knapsack_cover_exact: DP table too large");

  // dp[i][j] = least value among subsets of the first i items whose cost,
  // with each item's cost capped at the threshold, is at least j.
  std::vector<std::vector<std::uint64_t>> dp(
      m + 1, std::vector<std::uint64_t>(bp + 1, kUnreached));
  dp[0][0] = 0;
  for (int i = 1; i <= m; ++i) {
    std::uint64_t c = std::min(kc.items[i - 1].cost, bp);
    std::uint64_t v = kc.items[i - 1].value;
    for (std::uint64_t j = 0; j <= bp; ++j) {
      dp[i][j] = dp[i - 1][j];
      std::uint64_t prev = dp[i - 1][j >= c ? j - c : 0];
      if (prev != kUnreached && prev <= kUnreached - 1 - v && prev + v < dp[i][j])
        dp[i][j] = prev + v;
    }
  }

  if (dp[m][bp] == kUnreached)
    throw InfeasibleError("knapsack cover: threshold unreachable");  // unreachable if feasible

  std::vector<int> set;
  std::uint64_t j = bp;
  for (int i = m; i >= 1; --i) {
    if (dp[i][j] == dp[i - 1][j]) continue;  // item skipped
    set.push_back(i - 1);
    std::uint64_t c = std::min(kc.items[i - 1].cost, bp);
    j = j >= c ? j - c : 0;
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace flownet
