#include "oracles.hpp"

#include <queue>

namespace cdsma::testing {

namespace {

std::vector<int> bfs_dist(const Graph& g, NodeId src) {
    std::vector<int> dist(g.node_count(), -1);
    std::queue<NodeId> q;
    dist[src] = 0;
    q.push(src);
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

void extend_paths(const Graph& g, const std::vector<int>& dist_to_t, NodeId t,
                  std::vector<NodeId>& partial,
                  std::vector<std::vector<NodeId>>& out) {
    NodeId u = partial.back();
    if (u == t) {
        out.push_back(partial);
        return;
    }
    for (NodeId v : g.neighbors(u)) {
        if (dist_to_t[v] == dist_to_t[u] - 1) {
            partial.push_back(v);
            extend_paths(g, dist_to_t, t, partial, out);
            partial.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<NodeId>> enumerate_shortest_paths(const Graph& g,
                                                          NodeId s,
                                                          NodeId t) {
    std::vector<int> dist_to_t = bfs_dist(g, t);
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> partial{s};
    extend_paths(g, dist_to_t, t, partial, out);
    return out;
}

std::uint64_t count_shortest_paths(const Graph& g, NodeId s, NodeId t) {
    return enumerate_shortest_paths(g, s, t).size();
}

std::vector<double> bc_brute(const Graph& g) {
    const int n = g.node_count();
    std::vector<double> bc(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            auto paths = enumerate_shortest_paths(g, s, t);
            const double sigma = static_cast<double>(paths.size());
            for (const auto& path : paths) {
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    bc[path[i]] += 1.0 / sigma;
                }
            }
        }
    }
    return bc;
}

std::vector<double> wcbc_brute(const Graph& g, const DemandVector& w,
                               NodeId t) {
    const int n = g.node_count();
    std::vector<double> values(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        if (s == t) continue;
        auto paths = enumerate_shortest_paths(g, s, t);
        const double share = w[s] / static_cast<double>(paths.size());
        for (const auto& path : paths) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                values[path[i]] += share;  // t itself earns nothing
            }
        }
    }
    return values;
}

std::vector<double> cbc_brute(const Graph& g, NodeId t) {
    return wcbc_brute(g, DemandVector::uniform(g.node_count()), t);
}

std::vector<double> wmap_brute(const Graph& g, const DemandVector& w,
                               const Subgraph& sub) {
    std::vector<double> mapped(g.node_count(), 0.0);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (sub.contains(s)) continue;
        auto paths = enumerate_shortest_paths(g, s, sub.host);
        const double share = w[s] / static_cast<double>(paths.size());
        for (const auto& path : paths) {
            for (NodeId u : path) {
                if (sub.contains(u)) {
                    mapped[u] += share;
                    break;
                }
            }
        }
    }
    return mapped;
}

Graph random_connected_graph(Rng& rng, int min_nodes, int max_nodes,
                             double extra_edge_prob) {
    const int n = min_nodes + static_cast<int>(uniform_below(
                                  rng, max_nodes - min_nodes + 1));
    EdgeList edges;
    for (NodeId u = 1; u < n; ++u) {
        edges.emplace_back(static_cast<NodeId>(uniform_index(rng, u)), u);
    }
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (uniform_real(rng) < extra_edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(edges, n);
}

DemandVector random_demand(Rng& rng, int n) {
    std::vector<double> w(n);
    for (double& x : w) {
        x = uniform_real(rng) < 0.2 ? 0.0 : 0.05 + 2.0 * uniform_real(rng);
    }
    w[uniform_index(rng, n)] = 0.5 + uniform_real(rng);
    return DemandVector(std::move(w));
}

Graph path_graph(int n) {
    EdgeList edges;
    for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(edges, n);
}

Graph cycle_graph(int n) {
    EdgeList edges;
    for (NodeId u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(edges, n);
}

Graph star_graph(int n) {
    EdgeList edges;
    for (NodeId u = 1; u < n; ++u) edges.emplace_back(0, u);
    return Graph(edges, n);
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<std::pair<NodeId, NodeId>> slots;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
        EdgeList edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask & (1ULL << i)) edges.push_back(slots[i]);
        }
        try {
            out.emplace_back(edges, n);
        } catch (const DisconnectedGraph&) {
        }
    }
    return out;
}

}  // namespace cdsma::testing
