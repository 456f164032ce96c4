#pragma once

#include "flownet/multigraph.hpp"

namespace flownet {

/// Maximum s-t-flow value with a minimum cut witnessing it.
struct FlowResult {
  ExtNat value;
  WeightedCut cut;
};

/// Maximum s-t-flow under capacities `u`, restricted to the edges marked
/// in `active` (nullptr means all present edges).
///
/// Infinite capacities follow the usual convention: if s and t are joined
/// by a path of infinite edges the value is infinite; otherwise infinities
/// are internally replaced by (sum of finite capacities + 1), which cannot
/// change the answer, and the finite value is exact. The returned cut is
/// canonical: its side is the set of vertices reachable from s in the
/// final residual network, the unique inclusion-minimal minimum-cut side,
/// so results are deterministic.
FlowResult max_flow(const Multigraph& g, const WeightMap& u, int s, int t,
                    const EdgeMask* active = nullptr);

/// Minimum-weight s-t-cut under an arbitrary weight map (capacities or
/// costs: same primitive). Same canonical-side determinism as max_flow.
WeightedCut min_weight_st_cut(const Multigraph& g, const WeightMap& w, int s, int t,
                              const EdgeMask* active = nullptr);

}  // namespace flownet
