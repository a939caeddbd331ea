#pragma once

#include "cdsma/demand_mapping.hpp"
#include "cdsma/rng.hpp"

namespace cdsma {

struct PlacementResult {
    NodeId host = 0;
    double cost = 0.0;
    std::vector<NodeId> tie_set;  // every exact minimizer, ascending
};

// Demand-weighted total hop distance from k to every node.
double access_cost(const Graph& g, const DemandVector& w, NodeId k);

// Exhaustive single-facility placement over all nodes; among exact cost
// ties the host is drawn uniformly via `rng`.
PlacementResult solve_1median_exact(const Graph& g, const DemandVector& w,
                                    Rng& rng);

// Placement restricted to subgraph members under their effective demand.
// Distances stay full-graph hop counts, so paths may leave the subgraph.
PlacementResult solve_1median_subgraph(const Graph& g, const Subgraph& sub,
                                       const EffectiveDemand& eff, Rng& rng);

}  // namespace cdsma
