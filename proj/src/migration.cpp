#include "cdsma/migration.hpp"

#include <limits>
#include <unordered_map>

namespace cdsma {

namespace {

template <typename Selector>
MigrationTrace migrate(const Graph& g, const DemandVector& w, NodeId start,
                       Selector make_subgraph, Rng& rng) {
    if (start < 0 || start >= g.node_count()) {
        throw NodeIdOutOfRange("start node " + std::to_string(start) +
                               " outside [0, " +
                               std::to_string(g.node_count()) + ")");
    }
    MigrationTrace t;
    t.hosts.push_back(start);
    NodeId current = start;
    double c_current = std::numeric_limits<double>::infinity();
    const int bound = g.node_count() + 1;
    for (;;) {
        Subgraph sub = make_subgraph(current);
        EffectiveDemand eff = map_demand(g, w, sub);
        PlacementResult res = solve_1median_subgraph(g, sub, eff, rng);
        if (!(res.cost < c_current)) break;
        if (++t.iterations > bound) {
            throw std::logic_error("migration exceeded its convergence bound");
        }
        t.costs.push_back(res.cost);
        if (res.host != current) t.hosts.push_back(res.host);
        current = res.host;
        c_current = res.cost;
    }
    t.final_host = current;
    t.hop_count = static_cast<int>(t.hosts.size()) - 1;
    t.final_global_cost = access_cost(g, w, current);
    return t;
}

}  // namespace

MigrationTrace run_cdsma(const Graph& g, const DemandVector& w, NodeId start,
                         double alpha, Rng& rng) {
    return migrate(
        g, w, start,
        [&](NodeId host) { return select_subgraph(g, w, host, alpha); }, rng);
}

MigrationTrace run_lom(const Graph& g, const DemandVector& w, NodeId start,
                       int radius, Rng& rng) {
    return migrate(
        g, w, start,
        [&](NodeId host) { return radius_subgraph(g, host, radius); }, rng);
}

const char* to_string(TraceViolation v) {
    switch (v) {
        case TraceViolation::NonDecreasingCost:
            return "NonDecreasingCost";
        case TraceViolation::IterationBoundExceeded:
            return "IterationBoundExceeded";
        case TraceViolation::MultipleRevisits:
            return "MultipleRevisits";
    }
    return "Unknown";
}

std::vector<TraceViolation> verify_trace(const MigrationTrace& t,
                                         int node_count) {
    std::vector<TraceViolation> out;
    for (std::size_t i = 1; i < t.costs.size(); ++i) {
        if (!(t.costs[i] < t.costs[i - 1])) {
            out.push_back(TraceViolation::NonDecreasingCost);
            break;
        }
    }
    if (t.iterations > node_count + 1) {
        out.push_back(TraceViolation::IterationBoundExceeded);
    }
    std::unordered_map<NodeId, int> visits;
    for (NodeId h : t.hosts) ++visits[h];
    int revisited = 0;
    bool thrice = false;
    for (const auto& [node, count] : visits) {
        if (count >= 2) ++revisited;
        if (count >= 3) thrice = true;
    }
    // A single bounce back to an earlier host is the legal terminal stop;
    // anything beyond that means the walk cycled.
    if (thrice || revisited > 1) {
        out.push_back(TraceViolation::MultipleRevisits);
    }
    return out;
}

}  // namespace cdsma
