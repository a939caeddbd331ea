#include "cdsma/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cdsma {

Graph::Graph(const EdgeList& edges, int node_count) {
    if (node_count <= 0) {
        throw EmptyGraph("graph must have at least one node");
    }
    adj_.assign(node_count, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
            throw NodeIdOutOfRange("edge (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ") outside [0, " +
                                   std::to_string(node_count) + ")");
        }
        if (u == v) {
            throw SelfLoop("self-loop at node " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;

    std::vector<char> seen(node_count, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != node_count) {
        throw DisconnectedGraph("graph is disconnected (" +
                                std::to_string(node_count - reached) +
                                " of " + std::to_string(node_count) +
                                " nodes unreachable from node 0)");
    }
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> hop_distances(const Graph& g, NodeId source) {
    if (source < 0 || source >= g.node_count()) {
        throw NodeIdOutOfRange("source node " + std::to_string(source) +
                               " outside [0, " +
                               std::to_string(g.node_count()) + ")");
    }
    std::vector<int> dist(g.node_count(), -1);
    std::queue<NodeId> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

ShortestPathField shortest_path_field(const Graph& g, NodeId target) {
    const int n = g.node_count();
    ShortestPathField f;
    f.target = target;
    f.dist = hop_distances(g, target);

    f.preds.assign(n, {});
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (f.dist[v] == f.dist[u] - 1) f.preds[u].push_back(v);
        }
    }

    int max_dist = 0;
    for (int d : f.dist) max_dist = std::max(max_dist, d);
    std::vector<std::vector<NodeId>> buckets(max_dist + 1);
    for (NodeId u = 0; u < n; ++u) buckets[f.dist[u]].push_back(u);
    f.by_distance.reserve(n);
    for (const auto& b : buckets) {
        f.by_distance.insert(f.by_distance.end(), b.begin(), b.end());
    }

    const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
    f.sigma.assign(n, 0);
    f.sigma_fp.assign(n, 0.0);
    f.sigma[target] = 1;
    f.sigma_fp[target] = 1.0;
    for (NodeId u : f.by_distance) {
        if (u == target) continue;
        std::uint64_t total = 0;
        double total_fp = 0.0;
        for (NodeId p : f.preds[u]) {
            if (f.sigma[p] > sat - total) {
                total = sat;
                f.overflow = true;
            } else {
                total += f.sigma[p];
            }
            total_fp += f.sigma_fp[p];
        }
        f.sigma[u] = total;
        f.sigma_fp[u] = total_fp;
    }
    return f;
}

ComponentExtraction maximal_connected_component(const EdgeList& edges,
                                                int node_count) {
    if (node_count <= 0) {
        throw EmptyGraph("component extraction needs at least one node");
    }
    std::vector<std::vector<NodeId>> adj(node_count);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
            throw NodeIdOutOfRange("edge (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ") outside [0, " +
                                   std::to_string(node_count) + ")");
        }
        if (u == v) {
            throw SelfLoop("self-loop at node " + std::to_string(u));
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    std::vector<char> seen(node_count, 0);
    std::vector<NodeId> best;
    for (NodeId s = 0; s < node_count; ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        std::queue<NodeId> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            comp.push_back(u);
            for (NodeId v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
            }
        }
        // Scanning seeds in ascending id order means the first component of
        // maximal size is also the one containing the smallest id.
        if (comp.size() > best.size()) best = std::move(comp);
    }

    std::sort(best.begin(), best.end());
    std::vector<NodeId> old_to_new(node_count, -1);
    for (std::size_t i = 0; i < best.size(); ++i) {
        old_to_new[best[i]] = static_cast<NodeId>(i);
    }
    EdgeList kept;
    for (const auto& [u, v] : edges) {
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0) {
            kept.emplace_back(old_to_new[u], old_to_new[v]);
        }
    }
    return ComponentExtraction{Graph(kept, static_cast<int>(best.size())),
                               std::move(old_to_new), std::move(best)};
}

std::vector<std::vector<int>> hop_distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> m;
    m.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        m.push_back(hop_distances(g, u));
    }
    return m;
}

}  // namespace cdsma
