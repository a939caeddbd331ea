#pragma once

#include <optional>

#include "cdsma/centrality.hpp"
#include "cdsma/rng.hpp"

namespace cdsma {

struct ClusterDoesNotFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cycle over nodes 0..n-1.
Graph gen_ring(int n);

// rows x cols lattice with 4-neighborhoods; node id = row * cols + col.
Graph gen_grid(int rows, int cols);

// Preferential-attachment graph: a clique on the first m+1 nodes, then each
// new node attaches m distinct edges with degree-proportional probability.
// Edge count is C(m+1, 2) + m * (n - m - 1).
Graph gen_barabasi_albert(int n, int edges_per_node, Rng& rng);

// Rank weights w(r) = r^-s / sum_l l^-s for ranks 1..n; sums to 1.
std::vector<double> zipf_weights(int n, double s);

// Placement of the top demand ranks on a grid: rank 1 goes to `head` and
// ranks 2..K fill the rest of the L1 ball of the given radius around it
// (K = 5 for radius 1, K = 13 for radius 2). The ball must fit entirely
// inside the grid.
struct ClusterSpec {
    int rows = 0;
    int cols = 0;
    int radius = 1;
    std::optional<NodeId> head;  // random valid head when unset
};

struct ZipfDemandSpec {
    double s = 0.0;
    std::optional<ClusterSpec> cluster;  // absent: ranks assigned by random
                                         // permutation
};

DemandVector gen_zipf_demand(const Graph& g, const ZipfDemandSpec& spec,
                             Rng& rng);

// Demand held by the top `cluster_size` ranks relative to the rest.
double spatial_contrast(int cluster_size, double s, int n);

struct ContrastReport {
    int cluster_size = 0;
    double z_fraction = 0.0;  // share of total demand inside the cluster
    double contrast = 0.0;
};

ContrastReport contrast_report(int cluster_size, double s, int n);

}  // namespace cdsma
