#pragma once

#include "cdsma/centrality.hpp"

namespace cdsma {

// Node subset a local placement instance is solved over.
struct Subgraph {
    std::vector<NodeId> members;    // ascending, always contains host
    NodeId host = 0;
    std::vector<char> member_mask;  // indexed by NodeId

    bool contains(NodeId u) const { return member_mask[u] != 0; }
    int size() const { return static_cast<int>(members.size()); }
};

// ceil(alpha * n) with a round-off guard, clamped to [1, n].
int scaled_count(double alpha, int n);

// The top-ceil(alpha*|V|) nodes by weighted_cbc toward `host` (value ties
// broken toward the smaller id) plus the host itself.
Subgraph select_subgraph(const Graph& g, const DemandVector& w, NodeId host,
                         double alpha);

// Every node within `radius` hops of the host.
Subgraph radius_subgraph(const Graph& g, NodeId host, int radius);

// Demand each member serves once outside demand is folded in: a non-member's
// demand is split across its shortest paths toward the host and credited to
// the first member met on each path. Members keep their own demand where it
// is, so the member totals preserve the global demand sum.
struct EffectiveDemand {
    std::vector<double> w_eff;  // aligned with Subgraph::members
    std::vector<double> w_map;  // mapped-in share only
};

EffectiveDemand map_demand(const Graph& g, const DemandVector& w,
                           const Subgraph& sub);

}  // namespace cdsma
