#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cdsma/topology_gen.hpp"
#include "oracles.hpp"

using namespace cdsma;

TEST_CASE("ring generation") {
    Graph r5 = gen_ring(5);
    CHECK(r5.node_count() == 5);
    CHECK(r5.edge_count() == 5);
    for (NodeId u = 0; u < 5; ++u) CHECK(r5.degree(u) == 2);
    CHECK_THROWS_AS(gen_ring(2), std::invalid_argument);
}

TEST_CASE("grid generation") {
    Graph g = gen_grid(10, 10);
    CHECK(g.node_count() == 100);
    CHECK(g.edge_count() == 180);

    Graph paper_shape = gen_grid(25, 4);
    CHECK(paper_shape.node_count() == 100);
    CHECK(paper_shape.edge_count() == 25 * 3 + 4 * 24);

    // Row-major ids: node (r, c) sits at r * cols + c.
    Graph g23 = gen_grid(2, 3);
    CHECK(g23.neighbors(0) == std::vector<NodeId>{1, 3});
    CHECK(g23.neighbors(4) == std::vector<NodeId>{1, 3, 5});
    CHECK_THROWS_AS(gen_grid(1, 5), std::invalid_argument);
}

TEST_CASE("preferential attachment generation") {
    Rng rng(2);
    Graph g = gen_barabasi_albert(100, 2, rng);
    CHECK(g.node_count() == 100);
    CHECK(g.edge_count() == 3 + 2 * 97);

    Rng rng1(3);
    Graph tree = gen_barabasi_albert(50, 1, rng1);
    CHECK(tree.edge_count() == 49);

    Rng ra(9);
    Rng rb(9);
    CHECK(gen_barabasi_albert(60, 2, ra).edges() ==
          gen_barabasi_albert(60, 2, rb).edges());

    CHECK_THROWS_AS(gen_barabasi_albert(2, 2, rng), std::invalid_argument);

    // Heavy-tailed degrees: hubs well above the near-constant mean.
    int tail_hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng r(seed);
        Graph ba = gen_barabasi_albert(300, 2, r);
        int max_degree = 0;
        double mean = 2.0 * ba.edge_count() / ba.node_count();
        for (NodeId u = 0; u < ba.node_count(); ++u) {
            max_degree = std::max(max_degree, ba.degree(u));
        }
        if (max_degree > 2.0 * mean) ++tail_hits;
    }
    CHECK(tail_hits == 20);
}

TEST_CASE("zipf weights") {
    auto flat = zipf_weights(5, 0.0);
    for (double x : flat) CHECK(std::abs(x - 0.2) <= 1e-12);

    auto w4 = zipf_weights(4, 1.0);
    CHECK(std::abs(w4[0] - 0.48) <= 1e-12);
    CHECK(std::abs(w4[1] - 0.24) <= 1e-12);
    CHECK(std::abs(w4[2] - 0.16) <= 1e-12);
    CHECK(std::abs(w4[3] - 0.12) <= 1e-12);

    for (double s : {0.0, 0.7, 1.0, 2.0}) {
        auto w = zipf_weights(40, s);
        double total = 0.0;
        for (double x : w) total += x;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        if (s > 0) {
            for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] < w[i - 1]);
        }
    }
}

TEST_CASE("random permutation demand uses every rank once") {
    Graph g = gen_grid(4, 5);
    Rng rng(6);
    DemandVector w = gen_zipf_demand(g, ZipfDemandSpec{1.0, std::nullopt}, rng);
    std::vector<double> sorted = w.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto ranks = zipf_weights(20, 1.0);
    for (int i = 0; i < 20; ++i) CHECK(std::abs(sorted[i] - ranks[i]) <= 1e-12);
}

TEST_CASE("clustered demand concentrates the top ranks in a ball") {
    Graph g = gen_grid(10, 10);
    ZipfDemandSpec spec{1.0, ClusterSpec{10, 10, 1, std::nullopt}};
    Rng rng(12);
    DemandVector w = gen_zipf_demand(g, spec, rng);

    // The heaviest node is the head; its 1-ball holds ranks 1..5.
    auto ranks = zipf_weights(100, 1.0);
    NodeId head = 0;
    for (NodeId u = 1; u < 100; ++u) {
        if (w[u] > w[head]) head = u;
    }
    CHECK(std::abs(w[head] - ranks[0]) <= 1e-12);
    int hr = head / 10;
    int hc = head % 10;
    CHECK(hr >= 1);
    CHECK(hr <= 8);
    CHECK(hc >= 1);
    CHECK(hc <= 8);

    double in_ball = 0.0;
    for (NodeId u = 0; u < 100; ++u) {
        if (std::abs(u / 10 - hr) + std::abs(u % 10 - hc) <= 1) {
            in_ball += w[u];
        }
    }
    double top5 = ranks[0] + ranks[1] + ranks[2] + ranks[3] + ranks[4];
    CHECK(std::abs(in_ball - top5) <= 1e-12);
    CHECK(std::abs(in_ball - 0.440) <= 1e-3);
    CHECK(std::abs(in_ball / (1.0 - in_ball) - 0.786) <= 1e-3);
}

TEST_CASE("clustered demand respects a fixed head and rejects bad ones") {
    Graph g = gen_grid(5, 5);
    Rng rng(1);
    ZipfDemandSpec centered{2.0, ClusterSpec{5, 5, 1, 12}};
    DemandVector w = gen_zipf_demand(g, centered, rng);
    auto ranks = zipf_weights(25, 2.0);
    CHECK(std::abs(w[12] - ranks[0]) <= 1e-12);

    ZipfDemandSpec border{2.0, ClusterSpec{5, 5, 1, 0}};
    CHECK_THROWS_AS(gen_zipf_demand(g, border, rng), ClusterDoesNotFit);

    // Radius 2 needs a 5x5 interior; a 4x4 grid has none.
    Graph small = gen_grid(4, 4);
    ZipfDemandSpec no_fit{1.0, ClusterSpec{4, 4, 2, std::nullopt}};
    CHECK_THROWS_AS(gen_zipf_demand(small, no_fit, rng), ClusterDoesNotFit);

    ZipfDemandSpec mismatch{1.0, ClusterSpec{4, 5, 1, std::nullopt}};
    CHECK_THROWS_AS(gen_zipf_demand(g, mismatch, rng), std::invalid_argument);
}

TEST_CASE("radius 2 ball holds thirteen ranks") {
    Graph g = gen_grid(9, 9);
    ZipfDemandSpec spec{1.0, ClusterSpec{9, 9, 2, 40}};  // center (4, 4)
    Rng rng(8);
    DemandVector w = gen_zipf_demand(g, spec, rng);
    auto ranks = zipf_weights(81, 1.0);
    double in_ball = 0.0;
    int ball_nodes = 0;
    for (NodeId u = 0; u < 81; ++u) {
        if (std::abs(u / 9 - 4) + std::abs(u % 9 - 4) <= 2) {
            in_ball += w[u];
            ++ball_nodes;
        }
    }
    CHECK(ball_nodes == 13);
    double top13 = 0.0;
    for (int i = 0; i < 13; ++i) top13 += ranks[i];
    CHECK(std::abs(in_ball - top13) <= 1e-12);
}

TEST_CASE("spatial contrast") {
    CHECK(std::abs(spatial_contrast(5, 1.0, 100) - 0.786) <= 1e-3);
    CHECK(std::abs(spatial_contrast(5, 2.0, 100) - 8.540) <= 1e-3);
    CHECK(std::abs(spatial_contrast(5, 0.0, 100) - 5.0 / 95.0) <= 1e-12);
    CHECK_THROWS_AS(spatial_contrast(0, 1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(spatial_contrast(100, 1.0, 100), std::invalid_argument);

    ContrastReport rep = contrast_report(5, 1.0, 100);
    CHECK(rep.cluster_size == 5);
    CHECK(std::abs(rep.z_fraction - 0.440) <= 1e-3);
    CHECK(std::abs(rep.contrast -
                   rep.z_fraction / (1.0 - rep.z_fraction)) <= 1e-9);
}
