#include "cdsma/median.hpp"

namespace cdsma {

double access_cost(const Graph& g, const DemandVector& w, NodeId k) {
    if (w.size() != g.node_count()) {
        throw InvalidDemand("demand vector size does not match node count");
    }
    std::vector<int> dist = hop_distances(g, k);
    double cost = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        cost += w[u] * dist[u];
    }
    return cost;
}

namespace {

// Candidates are scanned in ascending id order with exact cost comparison,
// so the tie set is deterministic; only the final draw consumes rng.
template <typename CostFn>
PlacementResult pick_min_cost(const std::vector<NodeId>& candidates,
                              CostFn cost_of, Rng& rng) {
    PlacementResult res;
    double best = 0.0;
    bool first = true;
    for (NodeId k : candidates) {
        double c = cost_of(k);
        if (first || c < best) {
            best = c;
            res.tie_set.assign(1, k);
            first = false;
        } else if (c == best) {
            res.tie_set.push_back(k);
        }
    }
    res.cost = best;
    res.host = res.tie_set[uniform_index(rng, res.tie_set.size())];
    return res;
}

}  // namespace

PlacementResult solve_1median_exact(const Graph& g, const DemandVector& w,
                                    Rng& rng) {
    if (w.size() != g.node_count()) {
        throw InvalidDemand("demand vector size does not match node count");
    }
    std::vector<NodeId> all(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) all[u] = u;
    return pick_min_cost(
        all,
        [&](NodeId k) {
            std::vector<int> dist = hop_distances(g, k);
            double c = 0.0;
            for (NodeId u = 0; u < g.node_count(); ++u) c += w[u] * dist[u];
            return c;
        },
        rng);
}

PlacementResult solve_1median_subgraph(const Graph& g, const Subgraph& sub,
                                       const EffectiveDemand& eff, Rng& rng) {
    if (eff.w_eff.size() != sub.members.size()) {
        throw InvalidDemand("effective demand does not match subgraph");
    }
    return pick_min_cost(
        sub.members,
        [&](NodeId k) {
            std::vector<int> dist = hop_distances(g, k);
            double c = 0.0;
            for (std::size_t i = 0; i < sub.members.size(); ++i) {
                c += eff.w_eff[i] * dist[sub.members[i]];
            }
            return c;
        },
        rng);
}

}  // namespace cdsma
