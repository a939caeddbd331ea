#pragma once

#include <string>

#include "cdsma/centrality.hpp"

namespace cdsma {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

struct MissingNode : std::runtime_error {
    NodeId node;
    explicit MissingNode(NodeId u)
        : std::runtime_error("no demand entry for node " + std::to_string(u)),
          node(u) {}
};

struct NegativeWeight : std::runtime_error {
    int line;
    explicit NegativeWeight(int line_no)
        : std::runtime_error("line " + std::to_string(line_no) +
                             ": negative demand weight"),
          line(line_no) {}
};

struct TopologySnapshot {
    std::string name;
    Graph graph;  // the largest connected component
    std::vector<std::string> original_ids;  // file label per dense node id
    double mcc_fraction = 1.0;  // component size / raw node count
};

// Edge-list text format: `#`-prefixed comment lines, blank lines, and data
// lines of exactly two whitespace-separated labels (integer or string).
// Labels densify in first-appearance order; the snapshot keeps the largest
// connected component. Self-loops are an error; duplicate edges are not.
TopologySnapshot load_edge_list(const std::string& path);

// Writes one `u v` line per edge. Edges that introduce each node are
// emitted first, in node order, so reloading a generated graph reproduces
// it under the identity relabeling.
void save_edge_list(const std::string& path, const Graph& g);

// Demand text format: one `<node> <weight>` line per node, full-precision
// weights, so save/load round-trips exactly.
void save_demand(const std::string& path, const DemandVector& w);
DemandVector load_demand(const std::string& path, int node_count);

}  // namespace cdsma
