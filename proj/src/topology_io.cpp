#include "cdsma/topology_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cdsma {

namespace {

std::string path_stem(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base =
        slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_comment_or_blank(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens[0][0] == '#';
}

int parse_node_label(const std::string& tok, int line_no) {
    if (tok.empty() ||
        tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line_no, "node label '" + tok +
                                      "' is not a nonnegative integer");
    }
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (errno != 0 || *end != '\0' || v > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "node label '" + tok + "' out of range");
    }
    return static_cast<int>(v);
}

double parse_weight(const std::string& tok, int line_no) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || errno != 0) {
        throw ParseError(line_no, "weight '" + tok + "' is not a number");
    }
    return v;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    return out;
}

}  // namespace

TopologySnapshot load_edge_list(const std::string& path) {
    std::ifstream in = open_for_read(path);
    std::unordered_map<std::string, NodeId> id_of;
    std::vector<std::string> labels;
    auto densify = [&](const std::string& label) {
        auto [it, inserted] =
            id_of.emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    EdgeList raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = split_tokens(line);
        if (is_comment_or_blank(tokens)) continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two labels, got " +
                                          std::to_string(tokens.size()));
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop at '" + tokens[0] + "'");
        }
        NodeId a = densify(tokens[0]);  // sequenced: a's label densifies first
        NodeId b = densify(tokens[1]);
        raw.emplace_back(a, b);
    }
    if (labels.empty()) {
        throw EmptyGraph("no edges in " + path);
    }

    ComponentExtraction ext =
        maximal_connected_component(raw, static_cast<int>(labels.size()));
    TopologySnapshot snap{path_stem(path), std::move(ext.graph), {}, 1.0};
    snap.original_ids.reserve(snap.graph.node_count());
    for (NodeId old_id : ext.new_to_old) {
        snap.original_ids.push_back(labels[old_id]);
    }
    snap.mcc_fraction = static_cast<double>(snap.graph.node_count()) /
                        static_cast<double>(labels.size());
    return snap;
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out = open_for_write(path);
    out << "# nodes=" << g.node_count() << " edges=" << g.edge_count()
        << "\n";
    // Emit each node's introducing edge first (its smallest smaller-id
    // neighbor, when one exists) so labels first appear in ascending order
    // and a reload densifies back to the same ids.
    std::set<std::pair<NodeId, NodeId>> used;
    for (NodeId u = 1; u < g.node_count(); ++u) {
        const auto& nbrs = g.neighbors(u);
        if (!nbrs.empty() && nbrs[0] < u) {
            out << nbrs[0] << " " << u << "\n";
            used.emplace(nbrs[0], u);
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (!used.count({u, v})) {
            out << u << " " << v << "\n";
        }
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

void save_demand(const std::string& path, const DemandVector& w) {
    std::ofstream out = open_for_write(path);
    char buf[64];
    for (NodeId u = 0; u < w.size(); ++u) {
        std::snprintf(buf, sizeof buf, "%.17g", w[u]);
        out << u << " " << buf << "\n";
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

DemandVector load_demand(const std::string& path, int node_count) {
    std::ifstream in = open_for_read(path);
    std::vector<double> w(node_count, 0.0);
    std::vector<char> seen(node_count, 0);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = split_tokens(line);
        if (is_comment_or_blank(tokens)) continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected `<node> <weight>`");
        }
        int node = parse_node_label(tokens[0], line_no);
        if (node >= node_count) {
            throw ParseError(line_no, "node " + tokens[0] +
                                          " outside [0, " +
                                          std::to_string(node_count) + ")");
        }
        if (seen[node]) {
            throw ParseError(line_no, "duplicate entry for node " +
                                          tokens[0]);
        }
        double weight = parse_weight(tokens[1], line_no);
        if (weight < 0.0) {
            throw NegativeWeight(line_no);
        }
        seen[node] = 1;
        w[node] = weight;
    }
    for (NodeId u = 0; u < node_count; ++u) {
        if (!seen[u]) throw MissingNode(u);
    }
    return DemandVector(std::move(w));
}

}  // namespace cdsma
