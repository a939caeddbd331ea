#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdsma {

using NodeId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisconnectedGraph : GraphError {
    using GraphError::GraphError;
};
struct SelfLoop : GraphError {
    using GraphError::GraphError;
};
struct NodeIdOutOfRange : GraphError {
    using GraphError::GraphError;
};
struct EmptyGraph : GraphError {
    using GraphError::GraphError;
};

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Immutable, undirected, connected, simple graph over dense ids [0, n).
// Edges are unweighted; every distance in the library is a hop count.
class Graph {
public:
    // Deduplicates parallel edges, then validates.
    // Throws NodeIdOutOfRange, SelfLoop, DisconnectedGraph, EmptyGraph.
    Graph(const EdgeList& edges, int node_count);

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }
    int degree(NodeId u) const { return static_cast<int>(adj_[u].size()); }

    // Each edge once, as (min, max), sorted.
    EdgeList edges() const;

private:
    std::vector<std::vector<NodeId>> adj_;  // sorted neighbor lists
    std::size_t edge_count_ = 0;
};

// BFS hop distances from `source` to every node.
std::vector<int> hop_distances(const Graph& g, NodeId source);

// Structure of all shortest paths toward one target node. preds(u) lists
// the neighbors of u that are one hop closer to the target, sigma(u) counts
// the distinct shortest u->target paths. sigma saturates on 64-bit overflow
// (flagged); sigma_fp carries the same counts in floating point and stays
// usable for path-fraction ratios either way.
struct ShortestPathField {
    NodeId target = 0;
    std::vector<int> dist;
    std::vector<std::uint64_t> sigma;
    std::vector<double> sigma_fp;
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> by_distance;  // ids ordered by (dist asc, id asc)
    bool overflow = false;
};

ShortestPathField shortest_path_field(const Graph& g, NodeId target);

struct ComponentExtraction {
    Graph graph;
    std::vector<NodeId> old_to_new;  // -1 for dropped nodes
    std::vector<NodeId> new_to_old;
};

// Largest connected component of a possibly disconnected edge list,
// re-densified in ascending original-id order. A size tie goes to the
// component containing the smallest original id. Connected input yields
// the identity mapping.
ComponentExtraction maximal_connected_component(const EdgeList& edges,
                                                int node_count);

// All-pairs hop distances; matrix[u][v] = d(u, v).
std::vector<std::vector<int>> hop_distance_matrix(const Graph& g);

}  // namespace cdsma
