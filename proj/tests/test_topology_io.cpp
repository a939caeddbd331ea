#include <doctest.h>

#include <fstream>
#include <string>

#include "cdsma/topology_gen.hpp"
#include "cdsma/topology_io.hpp"

using namespace cdsma;

namespace {

std::string write_file(const std::string& name, const std::string& content) {
    std::ofstream out(name);
    out << content;
    return name;
}

}  // namespace

TEST_CASE("edge list with integer labels") {
    auto path = write_file("io_p3.txt", "0 1\n1 2\n");
    TopologySnapshot snap = load_edge_list(path);
    CHECK(snap.name == "io_p3");
    CHECK(snap.graph.node_count() == 3);
    CHECK(snap.graph.edge_count() == 2);
    CHECK(snap.mcc_fraction == 1.0);
    CHECK(snap.original_ids == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("string labels densify in first-appearance order") {
    auto path = write_file("io_labels.txt", "a b\nc d\nb c\nx y\n");
    TopologySnapshot snap = load_edge_list(path);
    // a-b-c-d is the largest component; x-y is dropped.
    CHECK(snap.graph.node_count() == 4);
    CHECK(snap.graph.edge_count() == 3);
    CHECK(snap.mcc_fraction == doctest::Approx(4.0 / 6.0));
    CHECK(snap.original_ids == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(snap.graph.neighbors(1) == std::vector<NodeId>{0, 2});
}

TEST_CASE("comments, blanks, and duplicate edges") {
    auto path = write_file("io_dups.txt",
                           "# a comment\n\n0 1\n1 0\n  \n0 1\n# done\n1 2\n");
    TopologySnapshot snap = load_edge_list(path);
    CHECK(snap.graph.node_count() == 3);
    CHECK(snap.graph.edge_count() == 2);
}

TEST_CASE("edge list parse errors carry line numbers") {
    auto self = write_file("io_self.txt", "0 1\n2 2\n");
    CHECK_THROWS_WITH_AS(load_edge_list(self), "line 2: self-loop at '2'",
                         ParseError);

    auto triple = write_file("io_triple.txt", "0 1\n\n1 2 3\n");
    try {
        load_edge_list(triple);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    auto lonely = write_file("io_lonely.txt", "7\n");
    CHECK_THROWS_AS(load_edge_list(lonely), ParseError);

    auto empty = write_file("io_empty.txt", "# nothing but comments\n\n");
    CHECK_THROWS_AS(load_edge_list(empty), EmptyGraph);

    CHECK_THROWS_AS(load_edge_list("io_does_not_exist.txt"),
                    std::runtime_error);
}

TEST_CASE("generated graphs survive a save/load round trip unchanged") {
    Rng rng(42);
    std::vector<Graph> graphs;
    graphs.push_back(gen_ring(9));
    graphs.push_back(gen_grid(4, 6));
    graphs.push_back(gen_barabasi_albert(40, 2, rng));
    graphs.push_back(gen_barabasi_albert(30, 1, rng));

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        std::string path = "io_round_" + std::to_string(i) + ".txt";
        save_edge_list(path, g);
        TopologySnapshot snap = load_edge_list(path);
        CHECK(snap.mcc_fraction == 1.0);
        REQUIRE(snap.graph.node_count() == g.node_count());
        CHECK(snap.graph.edges() == g.edges());
        for (NodeId u = 0; u < g.node_count(); ++u) {
            CHECK(snap.original_ids[u] == std::to_string(u));
        }
    }
}

TEST_CASE("saved edge list starts with a summary comment") {
    Graph g = gen_ring(4);
    save_edge_list("io_header.txt", g);
    std::ifstream in("io_header.txt");
    std::string first;
    std::getline(in, first);
    CHECK(first == "# nodes=4 edges=4");
}

TEST_CASE("demand save/load round-trips exactly") {
    std::vector<double> values{1.0 / 3.0, 0.1, 7.25e-3, 0.0, 1e-17,
                               123456.789};
    DemandVector w(values);
    save_demand("io_demand.txt", w);
    DemandVector back = load_demand("io_demand.txt", w.size());
    for (NodeId u = 0; u < w.size(); ++u) {
        CHECK(back[u] == w[u]);
    }
}

TEST_CASE("demand file validation") {
    auto missing = write_file("io_w_missing.txt", "0 1.0\n1 2.0\n2 0.5\n");
    try {
        load_demand(missing, 5);
        FAIL("expected MissingNode");
    } catch (const MissingNode& e) {
        CHECK(e.node == 3);
    }

    auto negative = write_file("io_w_neg.txt", "0 1.0\n1 -2.0\n");
    try {
        load_demand(negative, 2);
        FAIL("expected NegativeWeight");
    } catch (const NegativeWeight& e) {
        CHECK(e.line == 2);
    }

    auto dup = write_file("io_w_dup.txt", "0 1.0\n0 2.0\n1 1.0\n");
    CHECK_THROWS_AS(load_demand(dup, 2), ParseError);

    auto garbage = write_file("io_w_bad.txt", "0 1.0\n1 fast\n");
    CHECK_THROWS_AS(load_demand(garbage, 2), ParseError);

    auto bad_label = write_file("io_w_label.txt", "zero 1.0\n");
    CHECK_THROWS_AS(load_demand(bad_label, 1), ParseError);

    auto out_of_range = write_file("io_w_range.txt", "0 1.0\n9 1.0\n");
    CHECK_THROWS_AS(load_demand(out_of_range, 2), ParseError);
}
