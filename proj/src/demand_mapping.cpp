#include "cdsma/demand_mapping.hpp"

#include <algorithm>
#include <cmath>

namespace cdsma {

int scaled_count(double alpha, int n) {
    int k = static_cast<int>(std::ceil(alpha * n - 1e-9));
    return std::clamp(k, 1, n);
}

namespace {

Subgraph from_member_ids(std::vector<NodeId> members, NodeId host, int n) {
    std::sort(members.begin(), members.end());
    Subgraph sub;
    sub.host = host;
    sub.member_mask.assign(n, 0);
    for (NodeId u : members) sub.member_mask[u] = 1;
    sub.members = std::move(members);
    return sub;
}

void check_host(const Graph& g, NodeId host) {
    if (host < 0 || host >= g.node_count()) {
        throw NodeIdOutOfRange("host " + std::to_string(host) +
                               " outside [0, " +
                               std::to_string(g.node_count()) + ")");
    }
}

}  // namespace

Subgraph select_subgraph(const Graph& g, const DemandVector& w, NodeId host,
                         double alpha) {
    check_host(g, host);
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("alpha must lie in (0, 1]");
    }
    const int n = g.node_count();
    CentralityVector c = weighted_cbc(g, w, host);

    std::vector<NodeId> order(n);
    for (NodeId u = 0; u < n; ++u) order[u] = u;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (c.values[a] != c.values[b]) return c.values[a] > c.values[b];
        return a < b;
    });

    const int k = scaled_count(alpha, n);
    std::vector<NodeId> members(order.begin(), order.begin() + k);
    if (std::find(members.begin(), members.end(), host) == members.end()) {
        members.push_back(host);
    }
    return from_member_ids(std::move(members), host, n);
}

Subgraph radius_subgraph(const Graph& g, NodeId host, int radius) {
    check_host(g, host);
    if (radius < 1) {
        throw std::invalid_argument("radius must be at least 1");
    }
    std::vector<int> dist = hop_distances(g, host);
    std::vector<NodeId> members;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (dist[u] <= radius) members.push_back(u);
    }
    return from_member_ids(std::move(members), host, g.node_count());
}

EffectiveDemand map_demand(const Graph& g, const DemandVector& w,
                           const Subgraph& sub) {
    if (w.size() != g.node_count()) {
        throw InvalidDemand("demand vector size does not match node count");
    }
    const int n = g.node_count();
    ShortestPathField f = shortest_path_field(g, sub.host);

    std::vector<int> member_index(n, -1);
    for (std::size_t i = 0; i < sub.members.size(); ++i) {
        member_index[sub.members[i]] = static_cast<int>(i);
    }

    // Walk nodes farthest-first. A non-member forwards its own demand plus
    // anything that arrived, split across predecessors in proportion to
    // their shortest-path counts; a member absorbs what arrives and forwards
    // nothing. The host sits at distance zero, so no mass escapes.
    std::vector<double> inflow(n, 0.0);
    EffectiveDemand out;
    out.w_map.assign(sub.members.size(), 0.0);
    for (auto it = f.by_distance.rbegin(); it != f.by_distance.rend(); ++it) {
        NodeId v = *it;
        if (sub.contains(v)) {
            out.w_map[member_index[v]] += inflow[v];
            continue;
        }
        double mass = inflow[v] + w[v];
        for (NodeId p : f.preds[v]) {
            inflow[p] += mass * (f.sigma_fp[p] / f.sigma_fp[v]);
        }
    }
    out.w_eff.resize(sub.members.size());
    for (std::size_t i = 0; i < sub.members.size(); ++i) {
        out.w_eff[i] = w[sub.members[i]] + out.w_map[i];
    }
    return out;
}

}  // namespace cdsma
