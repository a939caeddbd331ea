#pragma once

#include <iosfwd>
#include <variant>

#include "cdsma/migration.hpp"
#include "cdsma/topology_gen.hpp"
#include "cdsma/topology_io.hpp"

namespace cdsma {

// A finished run broke a documented algorithm invariant; callers abort.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The AtDistance start policy found no node at the requested hop distance.
struct NoNodeAtDistance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingTopology {
    int nodes = 0;
};
struct GridTopology {
    int rows = 0;
    int cols = 0;
};
struct BarabasiAlbertTopology {
    int nodes = 0;
    int edges_per_node = 2;
};
struct FileTopology {
    std::string path;
};
using TopologySource = std::variant<RingTopology, GridTopology,
                                    BarabasiAlbertTopology, FileTopology>;

struct StartRandom {};
struct StartFixed {
    NodeId node = 0;
};
struct StartAtDistance {
    int hops = 0;  // from a randomly designated exact optimum
};
using StartPolicy = std::variant<StartRandom, StartFixed, StartAtDistance>;

enum class Algorithm { Cdsma, Lom };

struct ExperimentSpec {
    TopologySource topology;
    ZipfDemandSpec demand;
    Algorithm algorithm = Algorithm::Cdsma;
    double alpha = 0.1;  // cdsma subgraph fraction
    int lom_radius = 1;  // lom ball radius
    int runs = 20;
    std::uint64_t seed = 0;
    StartPolicy start = StartRandom{};
};

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    NodeId start = 0;
    NodeId final_host = 0;
    double c_alg = 0.0;
    double c_opt = 0.0;
    double beta = 0.0;
    int hop_count = 0;
    int iterations = 0;
};

struct ExperimentReport {
    std::vector<RunRecord> records;
    double mean_beta = 0.0;
    double beta_ci = 0.0;  // 95% half-width, 1.96 * sample_std / sqrt(runs)
    double mean_hops = 0.0;
    double hops_ci = 0.0;
};

// Per run: derive an independent rng stream from the master seed, build a
// fresh topology and demand, solve the exact placement, pick a start per
// policy, run the configured algorithm, and verify its trace. Runs execute
// concurrently; records and aggregates do not depend on scheduling.
ExperimentReport run_experiment(const ExperimentSpec& spec);

struct SweepEntry {
    double alpha = 0.0;
    int subgraph_size = 0;  // ceil(alpha * |V|) + 1, host included
    ExperimentReport report;
};

struct SweepResult {
    std::vector<SweepEntry> entries;
    std::optional<double> alpha_eps;  // smallest alpha with mean beta <= 1+eps
    int eps_subgraph_size = 0;        // subgraph size at alpha_eps
    int node_count = 0;
};

SweepResult sweep_alpha(const ExperimentSpec& spec,
                        const std::vector<double>& alphas, double epsilon);

struct ComparisonRow {
    int dgen = 0;
    int runs_used = 0;  // 0 marks a void entry (no node that far out)
    double lom_beta = 0.0;
    double lom_hops = 0.0;
    double cdsma_beta = 0.0;
    double cdsma_hops = 0.0;
};

// Paired comparison: per run both algorithms start from the same node at
// exactly dgen hops from a designated exact optimum. Runs where the
// topology has no node that far from the optimum are skipped.
std::vector<ComparisonRow> compare_cdsma_lom(const ExperimentSpec& spec,
                                             double alpha, int lom_radius,
                                             const std::vector<int>& dgens);

void write_report_csv(std::ostream& os, const ExperimentReport& report);
void write_sweep_csv(std::ostream& os, const SweepResult& result);
void write_compare_csv(std::ostream& os,
                       const std::vector<ComparisonRow>& rows);

}  // namespace cdsma
