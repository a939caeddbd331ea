#include "cdsma/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

namespace cdsma {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Instance {
    Graph graph;
    DemandVector demand;
    PlacementResult oracle;
};

Graph build_topology(const TopologySource& src, const Graph* file_graph,
                     Rng& rng) {
    return std::visit(
        overloaded{
            [&](const RingTopology& t) { return gen_ring(t.nodes); },
            [&](const GridTopology& t) { return gen_grid(t.rows, t.cols); },
            [&](const BarabasiAlbertTopology& t) {
                return gen_barabasi_albert(t.nodes, t.edges_per_node, rng);
            },
            [&](const FileTopology&) { return Graph(*file_graph); },
        },
        src);
}

// Fixed per-run draw order: topology, demand, oracle tie-break, start.
Instance make_instance(const ExperimentSpec& spec, const Graph* file_graph,
                       Rng& rng) {
    Graph g = build_topology(spec.topology, file_graph, rng);
    DemandVector w = gen_zipf_demand(g, spec.demand, rng);
    PlacementResult oracle = solve_1median_exact(g, w, rng);
    return Instance{std::move(g), std::move(w), std::move(oracle)};
}

NodeId pick_start(const StartPolicy& policy, const Instance& inst, Rng& rng) {
    const int n = inst.graph.node_count();
    return std::visit(
        overloaded{
            [&](const StartRandom&) {
                return static_cast<NodeId>(uniform_index(rng, n));
            },
            [&](const StartFixed& f) {
                if (f.node < 0 || f.node >= n) {
                    throw NodeIdOutOfRange("fixed start node " +
                                           std::to_string(f.node) +
                                           " outside [0, " +
                                           std::to_string(n) + ")");
                }
                return f.node;
            },
            [&](const StartAtDistance& d) {
                if (d.hops < 0) {
                    throw std::invalid_argument(
                        "start distance must be nonnegative");
                }
                std::vector<int> dist =
                    hop_distances(inst.graph, inst.oracle.host);
                std::vector<NodeId> candidates;
                for (NodeId u = 0; u < n; ++u) {
                    if (dist[u] == d.hops) candidates.push_back(u);
                }
                if (candidates.empty()) {
                    throw NoNodeAtDistance(
                        "no node at " + std::to_string(d.hops) +
                        " hops from optimum " +
                        std::to_string(inst.oracle.host));
                }
                return candidates[uniform_index(rng, candidates.size())];
            },
        },
        policy);
}

void check_trace(const MigrationTrace& trace, int node_count, int run_index) {
    std::vector<TraceViolation> violations = verify_trace(trace, node_count);
    if (violations.empty()) return;
    std::string what = "run " + std::to_string(run_index) +
                       " violated trace invariants:";
    for (TraceViolation v : violations) {
        what += " ";
        what += to_string(v);
    }
    throw InvariantViolation(what);
}

MigrationTrace run_algorithm(const ExperimentSpec& spec, const Instance& inst,
                             NodeId start, Rng& rng) {
    if (spec.algorithm == Algorithm::Cdsma) {
        return run_cdsma(inst.graph, inst.demand, start, spec.alpha, rng);
    }
    return run_lom(inst.graph, inst.demand, start, spec.lom_radius, rng);
}

double cost_ratio(double c_alg, double c_opt) {
    if (c_opt > 0.0) return c_alg / c_opt;
    return c_alg == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

RunRecord execute_run(const ExperimentSpec& spec, const Graph* file_graph,
                      int run_index) {
    const std::uint64_t run_seed = derive_seed(spec.seed, run_index);
    Rng rng(run_seed);
    Instance inst = make_instance(spec, file_graph, rng);
    NodeId start = pick_start(spec.start, inst, rng);
    MigrationTrace trace = run_algorithm(spec, inst, start, rng);
    check_trace(trace, inst.graph.node_count(), run_index);
    RunRecord rec;
    rec.run = run_index;
    rec.seed = run_seed;
    rec.start = start;
    rec.final_host = trace.final_host;
    rec.c_alg = trace.final_global_cost;
    rec.c_opt = inst.oracle.cost;
    rec.beta = cost_ratio(rec.c_alg, rec.c_opt);
    rec.hop_count = trace.hop_count;
    rec.iterations = trace.iterations;
    return rec;
}

void parallel_runs(int count, const std::function<void(int)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::clamp(hw == 0 ? 1 : static_cast<int>(hw), 1, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct MeanCi {
    double mean = 0.0;
    double ci = 0.0;
};

MeanCi mean_ci(const std::vector<double>& xs) {
    MeanCi out;
    const std::size_t n = xs.size();
    if (n == 0) return out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(n);
    if (n < 2) return out;
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    double sample_std = std::sqrt(ss / static_cast<double>(n - 1));
    out.ci = 1.96 * sample_std / std::sqrt(static_cast<double>(n));
    return out;
}

ExperimentReport finalize(std::vector<RunRecord> records) {
    ExperimentReport report;
    std::vector<double> betas;
    std::vector<double> hops;
    betas.reserve(records.size());
    hops.reserve(records.size());
    for (const RunRecord& r : records) {
        betas.push_back(r.beta);
        hops.push_back(static_cast<double>(r.hop_count));
    }
    MeanCi b = mean_ci(betas);
    MeanCi h = mean_ci(hops);
    report.records = std::move(records);
    report.mean_beta = b.mean;
    report.beta_ci = b.ci;
    report.mean_hops = h.mean;
    report.hops_ci = h.ci;
    return report;
}

const Graph* load_file_topology(const TopologySource& src,
                                std::optional<TopologySnapshot>& storage) {
    if (const auto* file = std::get_if<FileTopology>(&src)) {
        storage = load_edge_list(file->path);
        return &storage->graph;
    }
    return nullptr;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }
    std::optional<TopologySnapshot> snapshot;
    const Graph* file_graph = load_file_topology(spec.topology, snapshot);

    std::vector<RunRecord> records(spec.runs);
    parallel_runs(spec.runs, [&](int i) {
        records[i] = execute_run(spec, file_graph, i);
    });
    return finalize(std::move(records));
}

SweepResult sweep_alpha(const ExperimentSpec& spec,
                        const std::vector<double>& alphas, double epsilon) {
    if (alphas.empty()) {
        throw std::invalid_argument("alpha sweep needs at least one alpha");
    }
    if (!std::is_sorted(alphas.begin(), alphas.end())) {
        throw std::invalid_argument("alphas must be sorted ascending");
    }
    std::optional<TopologySnapshot> snapshot;
    const Graph* file_graph = load_file_topology(spec.topology, snapshot);
    int node_count = std::visit(
        overloaded{
            [](const RingTopology& t) { return t.nodes; },
            [](const GridTopology& t) { return t.rows * t.cols; },
            [](const BarabasiAlbertTopology& t) { return t.nodes; },
            [&](const FileTopology&) { return file_graph->node_count(); },
        },
        spec.topology);

    SweepResult result;
    result.node_count = node_count;
    for (double alpha : alphas) {
        ExperimentSpec entry_spec = spec;
        entry_spec.algorithm = Algorithm::Cdsma;
        entry_spec.alpha = alpha;
        SweepEntry entry;
        entry.alpha = alpha;
        entry.subgraph_size =
            std::min(node_count, scaled_count(alpha, node_count) + 1);
        entry.report = run_experiment(entry_spec);
        if (!result.alpha_eps && entry.report.mean_beta <= 1.0 + epsilon) {
            result.alpha_eps = alpha;
            result.eps_subgraph_size = entry.subgraph_size;
        }
        result.entries.push_back(std::move(entry));
    }
    return result;
}

std::vector<ComparisonRow> compare_cdsma_lom(const ExperimentSpec& spec,
                                             double alpha, int lom_radius,
                                             const std::vector<int>& dgens) {
    if (spec.runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }
    std::optional<TopologySnapshot> snapshot;
    const Graph* file_graph = load_file_topology(spec.topology, snapshot);

    std::vector<ComparisonRow> rows;
    for (int dgen : dgens) {
        if (dgen < 0) {
            throw std::invalid_argument("dgen must be nonnegative");
        }
        struct Slot {
            bool used = false;
            double lom_beta = 0.0, lom_hops = 0.0;
            double cdsma_beta = 0.0, cdsma_hops = 0.0;
        };
        std::vector<Slot> slots(spec.runs);
        parallel_runs(spec.runs, [&](int r) {
            const std::uint64_t run_seed = derive_seed(spec.seed, r);
            Rng rng(run_seed);
            Instance inst = make_instance(spec, file_graph, rng);
            NodeId start = 0;
            try {
                start = pick_start(StartAtDistance{dgen}, inst, rng);
            } catch (const NoNodeAtDistance&) {
                return;  // leaves the slot unused; may void the row
            }
            Rng rng_cdsma(derive_seed(run_seed, 0x63));
            Rng rng_lom(derive_seed(run_seed, 0x6c));
            MigrationTrace cd =
                run_cdsma(inst.graph, inst.demand, start, alpha, rng_cdsma);
            check_trace(cd, inst.graph.node_count(), r);
            MigrationTrace lo =
                run_lom(inst.graph, inst.demand, start, lom_radius, rng_lom);
            check_trace(lo, inst.graph.node_count(), r);
            Slot& s = slots[r];
            s.used = true;
            s.cdsma_beta = cost_ratio(cd.final_global_cost, inst.oracle.cost);
            s.cdsma_hops = cd.hop_count;
            s.lom_beta = cost_ratio(lo.final_global_cost, inst.oracle.cost);
            s.lom_hops = lo.hop_count;
        });

        ComparisonRow row;
        row.dgen = dgen;
        for (const Slot& s : slots) {
            if (!s.used) continue;
            ++row.runs_used;
            row.lom_beta += s.lom_beta;
            row.lom_hops += s.lom_hops;
            row.cdsma_beta += s.cdsma_beta;
            row.cdsma_hops += s.cdsma_hops;
        }
        if (row.runs_used > 0) {
            row.lom_beta /= row.runs_used;
            row.lom_hops /= row.runs_used;
            row.cdsma_beta /= row.runs_used;
            row.cdsma_hops /= row.runs_used;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

void write_report_csv(std::ostream& os, const ExperimentReport& report) {
    os << "run,seed,start,final_host,c_alg,c_opt,beta,h_m,iterations\n";
    for (const RunRecord& r : report.records) {
        os << r.run << ',' << r.seed << ',' << r.start << ',' << r.final_host
           << ',' << fmt6(r.c_alg) << ',' << fmt6(r.c_opt) << ','
           << fmt6(r.beta) << ',' << r.hop_count << ',' << r.iterations
           << '\n';
    }
    os << "# mean_beta=" << fmt6(report.mean_beta) << ",ci="
       << fmt6(report.beta_ci) << '\n';
    os << "# mean_hm=" << fmt6(report.mean_hops) << ",ci="
       << fmt6(report.hops_ci) << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "alpha,run,seed,start,final_host,c_alg,c_opt,beta,h_m,iterations\n";
    for (const SweepEntry& e : result.entries) {
        for (const RunRecord& r : e.report.records) {
            os << fmt6(e.alpha) << ',' << r.run << ',' << r.seed << ','
               << r.start << ',' << r.final_host << ',' << fmt6(r.c_alg)
               << ',' << fmt6(r.c_opt) << ',' << fmt6(r.beta) << ','
               << r.hop_count << ',' << r.iterations << '\n';
        }
    }
    for (const SweepEntry& e : result.entries) {
        os << "# alpha=" << fmt6(e.alpha) << ",subgraph_size="
           << e.subgraph_size << ",mean_beta=" << fmt6(e.report.mean_beta)
           << ",ci=" << fmt6(e.report.beta_ci) << ",mean_hm="
           << fmt6(e.report.mean_hops) << ",ci_hm="
           << fmt6(e.report.hops_ci) << '\n';
    }
    if (result.alpha_eps) {
        os << "# alpha_eps=" << fmt6(*result.alpha_eps) << ",subgraph_size="
           << result.eps_subgraph_size << '\n';
    } else {
        os << "# alpha_eps=none\n";
    }
}

void write_compare_csv(std::ostream& os,
                       const std::vector<ComparisonRow>& rows) {
    os << "dgen,runs_used,lom_beta,lom_hm,cdsma_beta,cdsma_hm\n";
    for (const ComparisonRow& row : rows) {
        os << row.dgen << ',' << row.runs_used << ',';
        if (row.runs_used == 0) {
            os << "--,--,--,--\n";
            continue;
        }
        os << fmt6(row.lom_beta) << ',' << fmt6(row.lom_hops) << ','
           << fmt6(row.cdsma_beta) << ',' << fmt6(row.cdsma_hops) << '\n';
    }
}

}  // namespace cdsma
