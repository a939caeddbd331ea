#pragma once

#include "cdsma/median.hpp"

namespace cdsma {

struct MigrationTrace {
    std::vector<NodeId> hosts;  // start plus one entry per relocation
    std::vector<double> costs;  // accepted local costs, strictly decreasing
    NodeId final_host = 0;
    double final_global_cost = 0.0;  // full-graph access cost of final_host
    int hop_count = 0;               // relocations after the start node
    int iterations = 0;              // accepted solve iterations
};

// Iterative migration: around the current host, pick the top-alpha fraction
// of nodes by weighted_cbc, fold outside demand onto them, solve the local
// placement and move while the local cost strictly improves.
MigrationTrace run_cdsma(const Graph& g, const DemandVector& w, NodeId start,
                         double alpha, Rng& rng);

// Local-search baseline: the candidate set is the radius-hop ball around
// the current host; demand mapping and the acceptance rule are identical
// to run_cdsma.
MigrationTrace run_lom(const Graph& g, const DemandVector& w, NodeId start,
                       int radius, Rng& rng);

enum class TraceViolation {
    NonDecreasingCost,
    IterationBoundExceeded,
    MultipleRevisits,
};

const char* to_string(TraceViolation v);

// Structural checks on a finished trace: costs strictly decrease, the
// iteration count stays within node_count + 1, and at most one host is
// ever revisited (and then only once, as the terminal stop).
std::vector<TraceViolation> verify_trace(const MigrationTrace& t,
                                         int node_count);

}  // namespace cdsma
