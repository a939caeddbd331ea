#include "cdsma/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cdsma {

DemandVector::DemandVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) {
        throw InvalidDemand("demand vector is empty");
    }
    bool any_positive = false;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!(w_[i] >= 0.0) || !std::isfinite(w_[i])) {
            throw InvalidDemand("demand at node " + std::to_string(i) +
                                " is not a finite nonnegative number");
        }
        if (w_[i] > 0.0) any_positive = true;
    }
    if (!any_positive) {
        throw InvalidDemand("demand vector has no positive entry");
    }
}

DemandVector DemandVector::uniform(int n, double value) {
    return DemandVector(std::vector<double>(n, value));
}

double DemandVector::total() const {
    double t = 0.0;
    for (double x : w_) t += x;
    return t;
}

namespace {

// Demand mass flowing through each node on shortest paths toward the
// field's target: flow(u) = w(u) + sum over successors v with u in preds(v)
// of flow(v) * sigma(u) / sigma(v). Nodes are processed farthest-first;
// every push goes strictly downhill in distance.
std::vector<double> downhill_flow(const ShortestPathField& f,
                                  const std::vector<double>& w) {
    const std::size_t n = f.dist.size();
    std::vector<double> flow(n, 0.0);
    for (auto it = f.by_distance.rbegin(); it != f.by_distance.rend(); ++it) {
        NodeId v = *it;
        if (v == f.target) continue;
        flow[v] += w[v];
        for (NodeId p : f.preds[v]) {
            flow[p] += flow[v] * (f.sigma_fp[p] / f.sigma_fp[v]);
        }
    }
    flow[f.target] = 0.0;
    return flow;
}

}  // namespace

CentralityVector betweenness_centrality(const Graph& g) {
    const int n = g.node_count();
    std::vector<double> bc(n, 0.0);
    std::vector<double> delta(n);
    for (NodeId s = 0; s < n; ++s) {
        ShortestPathField f = shortest_path_field(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = f.by_distance.rbegin(); it != f.by_distance.rend();
             ++it) {
            NodeId v = *it;
            for (NodeId p : f.preds[v]) {
                delta[p] += (f.sigma_fp[p] / f.sigma_fp[v]) * (1.0 + delta[v]);
            }
            if (v != s) bc[v] += delta[v];
        }
    }
    // Each unordered pair was accumulated from both endpoints.
    for (double& x : bc) x /= 2.0;
    return CentralityVector{CentralityKind::BC, std::nullopt, std::move(bc)};
}

CentralityVector conditional_bc(const Graph& g, NodeId target) {
    ShortestPathField f = shortest_path_field(g, target);
    std::vector<double> unit(g.node_count(), 1.0);
    return CentralityVector{CentralityKind::CBC, target,
                            downhill_flow(f, unit)};
}

CentralityVector weighted_cbc(const Graph& g, const DemandVector& w,
                              NodeId target) {
    if (w.size() != g.node_count()) {
        throw InvalidDemand("demand vector size " + std::to_string(w.size()) +
                            " does not match node count " +
                            std::to_string(g.node_count()));
    }
    ShortestPathField f = shortest_path_field(g, target);
    return CentralityVector{CentralityKind::WCBC, target,
                            downhill_flow(f, w.values())};
}

double ring_cbc_closed_form(int n_nodes, int hop_distance) {
    if (n_nodes < 3) {
        throw std::invalid_argument("ring needs at least 3 nodes");
    }
    if (hop_distance < 1 || hop_distance > n_nodes / 2) {
        throw std::invalid_argument("hop distance outside [1, n/2]");
    }
    double half = (n_nodes % 2 == 0) ? (n_nodes - 1) / 2.0
                                     : (n_nodes + 1) / 2.0;
    return std::max(half - hop_distance, 0.0);
}

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

// Monotone lattice paths between two grid cells.
double lattice_paths(int r1, int c1, int r2, int c2) {
    int dr = std::abs(r1 - r2);
    int dc = std::abs(c1 - c2);
    return binom(dr + dc, dr);
}

}  // namespace

double grid_cbc_closed_form(int rows, int cols, int u_row, int u_col,
                            int t_row, int t_col) {
    auto in_range = [&](int r, int c) {
        return r >= 1 && r <= rows && c >= 1 && c <= cols;
    };
    if (rows < 1 || cols < 1 || !in_range(u_row, u_col) ||
        !in_range(t_row, t_col)) {
        throw std::invalid_argument("grid coordinates out of range");
    }
    if (u_row == t_row && u_col == t_col) {
        throw std::invalid_argument("u must differ from t");
    }
    const int d_ut = std::abs(u_row - t_row) + std::abs(u_col - t_col);
    double total = 0.0;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            int d_su = std::abs(i - u_row) + std::abs(j - u_col);
            int d_st = std::abs(i - t_row) + std::abs(j - t_col);
            if (d_st != d_su + d_ut) continue;  // u off the s->t geodesics
            total += lattice_paths(i, j, u_row, u_col) *
                     lattice_paths(u_row, u_col, t_row, t_col) /
                     lattice_paths(i, j, t_row, t_col);
        }
    }
    return total;
}

}  // namespace cdsma
