#pragma once

#include <optional>

#include "cdsma/graph.hpp"

namespace cdsma {

struct InvalidDemand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-node nonnegative service demand with at least one positive entry.
class DemandVector {
public:
    explicit DemandVector(std::vector<double> w);
    static DemandVector uniform(int n, double value = 1.0);

    int size() const { return static_cast<int>(w_.size()); }
    double operator[](NodeId u) const { return w_[u]; }
    double total() const;
    const std::vector<double>& values() const { return w_; }

private:
    std::vector<double> w_;
};

enum class CentralityKind { BC, CBC, WCBC };

struct CentralityVector {
    CentralityKind kind;
    std::optional<NodeId> target;  // set for CBC and WCBC
    std::vector<double> values;
};

// Shortest-path betweenness over unordered node pairs, endpoints excluded:
// sum over {s,t} of sigma_st(u) / sigma_st.
CentralityVector betweenness_centrality(const Graph& g);

// Share of shortest paths from every node toward `target` that cross u.
// A node's own term counts in full, so values(u) >= 1 for u != target;
// values(target) = 0.
CentralityVector conditional_bc(const Graph& g, NodeId target);

// conditional_bc with each source's contribution scaled by its demand:
// sum over s of w(s) * sigma_st(u) / sigma_st. values(u) >= w(u) for
// u != target; values(target) = 0.
CentralityVector weighted_cbc(const Graph& g, const DemandVector& w,
                              NodeId target);

// Uniform-demand value at hop distance d from the target on an n-node ring.
// Exact for odd n; for even n the computed value exceeds this by exactly 1
// at every d (the expression drops the unit self term).
double ring_cbc_closed_form(int n_nodes, int hop_distance);

// Uniform-demand value on a rows x cols grid, 1-based (row, col)
// coordinates, u distinct from t.
double grid_cbc_closed_form(int rows, int cols, int u_row, int u_col,
                            int t_row, int t_col);

}  // namespace cdsma
