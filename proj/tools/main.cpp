#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cdsma/experiment.hpp"

namespace {

struct TopologyOptions {
    std::string kind = "ba";
    int nodes = 100;
    int rows = 10;
    int cols = 10;
    int ba_m = 2;
};

struct DemandOptions {
    double s = 0.0;
    int cluster_radius = 0;  // 0 disables clustering
};

void add_topology_flags(CLI::App* cmd, TopologyOptions& t) {
    cmd->add_option("--topology", t.kind, "ba | grid | ring | file:PATH")
        ->capture_default_str();
    cmd->add_option("--nodes", t.nodes, "node count (ba, ring)")
        ->capture_default_str();
    cmd->add_option("--rows", t.rows, "grid rows")->capture_default_str();
    cmd->add_option("--cols", t.cols, "grid cols")->capture_default_str();
    cmd->add_option("--ba-m", t.ba_m, "edges attached per new node (ba)")
        ->capture_default_str();
}

void add_demand_flags(CLI::App* cmd, DemandOptions& d) {
    cmd->add_option("--demand-s", d.s, "Zipf skew exponent")
        ->capture_default_str();
    cmd->add_option("--cluster-R", d.cluster_radius,
                    "cluster the top demand ranks in an R-ball on a grid")
        ->check(CLI::Range(1, 2));
}

cdsma::TopologySource parse_topology(const TopologyOptions& t) {
    if (t.kind == "ring") return cdsma::RingTopology{t.nodes};
    if (t.kind == "grid") return cdsma::GridTopology{t.rows, t.cols};
    if (t.kind == "ba") return cdsma::BarabasiAlbertTopology{t.nodes, t.ba_m};
    if (t.kind.rfind("file:", 0) == 0) {
        return cdsma::FileTopology{t.kind.substr(5)};
    }
    throw CLI::ValidationError("--topology",
                               "expected ba, grid, ring or file:PATH");
}

cdsma::ZipfDemandSpec parse_demand(const TopologyOptions& t,
                                   const DemandOptions& d) {
    cdsma::ZipfDemandSpec spec;
    spec.s = d.s;
    if (d.cluster_radius > 0) {
        if (t.kind != "grid") {
            throw CLI::ValidationError("--cluster-R",
                                       "clustered demand needs --topology grid");
        }
        spec.cluster =
            cdsma::ClusterSpec{t.rows, t.cols, d.cluster_radius, std::nullopt};
    }
    return spec;
}

void write_output(const std::string& path,
                  const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    emit(out);
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

cdsma::Graph build_topology_once(const cdsma::TopologySource& src,
                                 cdsma::Rng& rng) {
    if (const auto* file = std::get_if<cdsma::FileTopology>(&src)) {
        return cdsma::load_edge_list(file->path).graph;
    }
    if (const auto* ring = std::get_if<cdsma::RingTopology>(&src)) {
        return cdsma::gen_ring(ring->nodes);
    }
    if (const auto* grid = std::get_if<cdsma::GridTopology>(&src)) {
        return cdsma::gen_grid(grid->rows, grid->cols);
    }
    const auto& ba = std::get<cdsma::BarabasiAlbertTopology>(src);
    return cdsma::gen_barabasi_albert(ba.nodes, ba.edges_per_node, rng);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"service placement and migration simulator"};
    app.require_subcommand(1);

    TopologyOptions topo;
    DemandOptions demand;
    std::uint64_t seed = 0;
    int runs = 20;
    std::string out_path;

    auto* generate = app.add_subcommand(
        "generate", "emit topology (and optionally demand) files");
    std::string demand_out;
    add_topology_flags(generate, topo);
    add_demand_flags(generate, demand);
    generate->add_option("--seed", seed, "rng seed")->capture_default_str();
    generate->add_option("--out", out_path, "edge-list output path")
        ->required();
    generate->add_option("--demand-out", demand_out,
                         "also write a demand file here");

    auto* run = app.add_subcommand("run", "single experiment, CSV per run");
    std::string algorithm = "cdsma";
    double alpha = 0.1;
    int lom_radius = 1;
    int start_node = -1;
    int dgen_single = -1;
    add_topology_flags(run, topo);
    add_demand_flags(run, demand);
    run->add_option("--algorithm", algorithm, "cdsma | lom")
        ->check(CLI::IsMember({"cdsma", "lom"}))
        ->capture_default_str();
    run->add_option("--alpha", alpha, "cdsma subgraph fraction in (0,1]")
        ->capture_default_str();
    run->add_option("--lom-R", lom_radius, "lom ball radius")
        ->capture_default_str();
    run->add_option("--runs", runs, "independent runs")->capture_default_str();
    run->add_option("--seed", seed, "master rng seed")->capture_default_str();
    auto* start_opt =
        run->add_option("--start-node", start_node, "fixed start node id");
    run->add_option("--dgen", dgen_single,
                    "start exactly this many hops from the optimum")
        ->excludes(start_opt);
    run->add_option("--out", out_path, "CSV path (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "alpha sweep, CSV with alpha");
    std::vector<double> alphas;
    double epsilon = 0.025;
    add_topology_flags(sweep, topo);
    add_demand_flags(sweep, demand);
    sweep->add_option("--alpha", alphas, "alphas to evaluate (ascending)")
        ->required();
    sweep->add_option("--epsilon", epsilon, "accuracy target: beta <= 1+eps")
        ->capture_default_str();
    sweep->add_option("--runs", runs)->capture_default_str();
    sweep->add_option("--seed", seed)->capture_default_str();
    sweep->add_option("--out", out_path, "CSV path (default: stdout)");

    auto* compare =
        app.add_subcommand("compare", "cdsma vs lom from matched starts");
    std::vector<int> dgens;
    add_topology_flags(compare, topo);
    add_demand_flags(compare, demand);
    compare->add_option("--alpha", alpha)->capture_default_str();
    compare->add_option("--lom-R", lom_radius)->capture_default_str();
    compare->add_option("--dgen", dgens, "start distances from the optimum")
        ->required();
    compare->add_option("--runs", runs)->capture_default_str();
    compare->add_option("--seed", seed)->capture_default_str();
    compare->add_option("--out", out_path, "CSV path (default: stdout)");

    auto* oracle =
        app.add_subcommand("oracle", "exact 1-median of a topology + demand");
    std::string demand_file;
    add_topology_flags(oracle, topo);
    add_demand_flags(oracle, demand);
    oracle->add_option("--demand", demand_file,
                       "demand file (default: generated Zipf demand)");
    oracle->add_option("--seed", seed)->capture_default_str();
    oracle->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(generate)) {
            cdsma::TopologySource src = parse_topology(topo);
            cdsma::Rng rng(seed);
            cdsma::Graph g = build_topology_once(src, rng);
            cdsma::save_edge_list(out_path, g);
            if (!demand_out.empty()) {
                cdsma::DemandVector w =
                    cdsma::gen_zipf_demand(g, parse_demand(topo, demand), rng);
                cdsma::save_demand(demand_out, w);
            }
        } else if (app.got_subcommand(run)) {
            cdsma::ExperimentSpec spec;
            spec.topology = parse_topology(topo);
            spec.demand = parse_demand(topo, demand);
            spec.algorithm = algorithm == "lom" ? cdsma::Algorithm::Lom
                                                : cdsma::Algorithm::Cdsma;
            spec.alpha = alpha;
            spec.lom_radius = lom_radius;
            spec.runs = runs;
            spec.seed = seed;
            if (dgen_single >= 0) {
                spec.start = cdsma::StartAtDistance{dgen_single};
            } else if (start_node >= 0) {
                spec.start = cdsma::StartFixed{start_node};
            }
            cdsma::ExperimentReport report = cdsma::run_experiment(spec);
            write_output(out_path, [&](std::ostream& os) {
                cdsma::write_report_csv(os, report);
            });
        } else if (app.got_subcommand(sweep)) {
            cdsma::ExperimentSpec spec;
            spec.topology = parse_topology(topo);
            spec.demand = parse_demand(topo, demand);
            spec.runs = runs;
            spec.seed = seed;
            cdsma::SweepResult result =
                cdsma::sweep_alpha(spec, alphas, epsilon);
            write_output(out_path, [&](std::ostream& os) {
                cdsma::write_sweep_csv(os, result);
            });
        } else if (app.got_subcommand(compare)) {
            cdsma::ExperimentSpec spec;
            spec.topology = parse_topology(topo);
            spec.demand = parse_demand(topo, demand);
            spec.runs = runs;
            spec.seed = seed;
            std::vector<cdsma::ComparisonRow> rows =
                cdsma::compare_cdsma_lom(spec, alpha, lom_radius, dgens);
            write_output(out_path, [&](std::ostream& os) {
                cdsma::write_compare_csv(os, rows);
            });
        } else if (app.got_subcommand(oracle)) {
            cdsma::TopologySource src = parse_topology(topo);
            cdsma::Rng rng(seed);
            cdsma::Graph g = build_topology_once(src, rng);
            std::optional<cdsma::DemandVector> w;
            if (!demand_file.empty()) {
                w = cdsma::load_demand(demand_file, g.node_count());
            } else {
                w = cdsma::gen_zipf_demand(g, parse_demand(topo, demand), rng);
            }
            cdsma::PlacementResult res =
                cdsma::solve_1median_exact(g, *w, rng);
            write_output(out_path, [&](std::ostream& os) {
                os << "nodes " << g.node_count() << "\n";
                os << "edges " << g.edge_count() << "\n";
                os << "host " << res.host << "\n";
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6f", res.cost);
                os << "cost " << buf << "\n";
                os << "tie_set";
                for (cdsma::NodeId u : res.tie_set) os << " " << u;
                os << "\n";
            });
        }
    } catch (const cdsma::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // bad generator or algorithm parameters are input errors
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
