#include "cdsma/topology_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cdsma {

Graph gen_ring(int n) {
    if (n < 3) {
        throw std::invalid_argument("ring needs at least 3 nodes");
    }
    EdgeList edges;
    edges.reserve(n);
    for (NodeId u = 0; u < n; ++u) {
        edges.emplace_back(u, (u + 1) % n);
    }
    return Graph(edges, n);
}

Graph gen_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("grid needs at least 2 rows and 2 cols");
    }
    EdgeList edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return Graph(edges, rows * cols);
}

Graph gen_barabasi_albert(int n, int edges_per_node, Rng& rng) {
    const int m = edges_per_node;
    if (m < 1 || n <= m) {
        throw std::invalid_argument("preferential attachment needs n > m >= 1");
    }
    EdgeList edges;
    std::vector<NodeId> stubs;  // each node repeated once per incident edge
    for (NodeId u = 0; u <= m; ++u) {
        for (NodeId v = u + 1; v <= m; ++v) {
            edges.emplace_back(u, v);
            stubs.push_back(u);
            stubs.push_back(v);
        }
    }
    std::vector<NodeId> chosen;
    for (NodeId k = m + 1; k < n; ++k) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            NodeId cand = stubs[uniform_index(rng, stubs.size())];
            if (std::find(chosen.begin(), chosen.end(), cand) ==
                chosen.end()) {
                chosen.push_back(cand);
            }
        }
        for (NodeId t : chosen) {
            edges.emplace_back(k, t);
            stubs.push_back(t);
            stubs.push_back(k);
        }
    }
    return Graph(edges, n);
}

std::vector<double> zipf_weights(int n, double s) {
    if (n < 1) {
        throw std::invalid_argument("zipf needs at least one rank");
    }
    std::vector<double> w(n);
    double norm = 0.0;
    for (int r = 1; r <= n; ++r) {
        w[r - 1] = std::pow(static_cast<double>(r), -s);
        norm += w[r - 1];
    }
    for (double& x : w) x /= norm;
    return w;
}

namespace {

void assign_shuffled(const std::vector<NodeId>& nodes, int first_rank,
                     const std::vector<double>& rank_weights,
                     std::vector<double>& w, Rng& rng) {
    std::vector<int> ranks(nodes.size());
    std::iota(ranks.begin(), ranks.end(), first_rank);
    shuffle(rng, ranks);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        w[nodes[i]] = rank_weights[ranks[i]];
    }
}

}  // namespace

DemandVector gen_zipf_demand(const Graph& g, const ZipfDemandSpec& spec,
                             Rng& rng) {
    const int n = g.node_count();
    const std::vector<double> rank_weights = zipf_weights(n, spec.s);
    std::vector<double> w(n, 0.0);

    if (!spec.cluster) {
        std::vector<NodeId> nodes(n);
        std::iota(nodes.begin(), nodes.end(), 0);
        assign_shuffled(nodes, 0, rank_weights, w, rng);
        return DemandVector(std::move(w));
    }

    const ClusterSpec& cs = *spec.cluster;
    if (cs.rows < 2 || cs.cols < 2 || cs.rows * cs.cols != n) {
        throw std::invalid_argument(
            "cluster spec shape does not match the graph");
    }
    const int R = cs.radius;
    if (R < 1) {
        throw std::invalid_argument("cluster radius must be at least 1");
    }

    int head_r = 0;
    int head_c = 0;
    if (cs.head) {
        NodeId head = *cs.head;
        if (head < 0 || head >= n) {
            throw NodeIdOutOfRange("cluster head outside the grid");
        }
        head_r = head / cs.cols;
        head_c = head % cs.cols;
        if (head_r < R || head_r >= cs.rows - R || head_c < R ||
            head_c >= cs.cols - R) {
            throw ClusterDoesNotFit("cluster ball of radius " +
                                    std::to_string(R) +
                                    " does not fit around node " +
                                    std::to_string(head));
        }
    } else {
        if (cs.rows < 2 * R + 1 || cs.cols < 2 * R + 1) {
            throw ClusterDoesNotFit("grid too small for a radius-" +
                                    std::to_string(R) + " cluster");
        }
        head_r = R + static_cast<int>(uniform_below(rng, cs.rows - 2 * R));
        head_c = R + static_cast<int>(uniform_below(rng, cs.cols - 2 * R));
    }
    const NodeId head = head_r * cs.cols + head_c;

    std::vector<NodeId> ball_rest;
    std::vector<char> in_ball(n, 0);
    in_ball[head] = 1;
    for (int r = 0; r < cs.rows; ++r) {
        for (int c = 0; c < cs.cols; ++c) {
            NodeId u = r * cs.cols + c;
            if (u != head && std::abs(r - head_r) + std::abs(c - head_c) <= R) {
                ball_rest.push_back(u);
                in_ball[u] = 1;
            }
        }
    }
    std::vector<NodeId> outside;
    for (NodeId u = 0; u < n; ++u) {
        if (!in_ball[u]) outside.push_back(u);
    }

    w[head] = rank_weights[0];
    assign_shuffled(ball_rest, 1, rank_weights, w, rng);
    assign_shuffled(outside, 1 + static_cast<int>(ball_rest.size()),
                    rank_weights, w, rng);
    return DemandVector(std::move(w));
}

double spatial_contrast(int cluster_size, double s, int n) {
    if (cluster_size < 1 || cluster_size >= n) {
        throw std::invalid_argument("cluster size outside [1, n)");
    }
    double inside = 0.0;
    double outside = 0.0;
    for (int r = 1; r <= n; ++r) {
        double term = std::pow(static_cast<double>(r), -s);
        (r <= cluster_size ? inside : outside) += term;
    }
    return inside / outside;
}

ContrastReport contrast_report(int cluster_size, double s, int n) {
    if (cluster_size < 1 || cluster_size >= n) {
        throw std::invalid_argument("cluster size outside [1, n)");
    }
    const std::vector<double> w = zipf_weights(n, s);
    double inside = 0.0;
    for (int i = 0; i < cluster_size; ++i) inside += w[i];
    return ContrastReport{cluster_size, inside,
                          spatial_contrast(cluster_size, s, n)};
}

}  // namespace cdsma
