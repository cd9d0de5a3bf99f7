#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "zrpsim/topology.hpp"

using namespace zrpsim;

namespace {
const std::string kLine5 = "5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n";
}

TEST_CASE("edge-list parsing and basic accessors") {
    const Network net = load_network(kLine5);
    CHECK(net.node_count() == 5);
    CHECK(net.edges().size() == 4);
    CHECK(net.edge_cost(0, 1) == 1.0);
    CHECK(net.edge_cost(1, 0) == 1.0);  // symmetric lookup
    CHECK(!net.edge_cost(0, 2).has_value());
    CHECK(net.max_edge_cost() == 1.0);
    CHECK(net.neighbors(2).size() == 2);
}

TEST_CASE("parser accepts comments, blank lines and reversed endpoints") {
    const Network net = load_network("# five nodes\n\n5\n# chain\n1 0 3\n\n1 2 2\n");
    CHECK(net.node_count() == 5);
    CHECK(net.edges().size() == 2);
    CHECK(net.edge_cost(0, 1) == 3.0);
    // canonical storage: u < v
    CHECK(net.edges()[0].u == 0);
    CHECK(net.edges()[0].v == 1);
}

TEST_CASE("parser errors name the offending 1-based line") {
    CHECK_THROWS_WITH_AS(load_network("abc\n"), "invalid node count at line 1",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("0\n"), "invalid node count at line 1",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("# c\n3\n0 1\n"), "malformed line at line 3",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("3\n0 1 2 9\n"), "malformed line at line 2",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("3\n0 3 1\n"),
                         "node index out of range at line 2", std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("3\n1 1 1\n"), "self-loop at line 2",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("3\n0 1 0\n"), "non-positive cost at line 2",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("3\n0 1 1\n1 0 2\n"),
                         "duplicate edge at line 3", std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network("# only a comment\n"),
                         "missing node count at line 1", std::runtime_error);
    CHECK_THROWS_WITH_AS(load_network(""), "missing node count at line 1",
                         std::runtime_error);
}

TEST_CASE("write/load round trip preserves the network") {
    const Network net = load_network("4\n2 0 7\n0 1 1\n1 3 4\n");
    const std::string text = write_edge_list(net);
    CHECK(text == "4\n0 1 1\n0 2 7\n1 3 4\n");
    const Network again = load_network(text);
    CHECK(write_edge_list(again) == text);
}

TEST_CASE("hop distances by breadth-first search") {
    const Network net = load_network(kLine5);
    CHECK(hop_distances(net, 0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(hop_distances(net, 2) == std::vector<int>{2, 1, 0, 1, 2});
    SUBCASE("truncation at max_hops") {
        CHECK(hop_distances(net, 0, 2) ==
              std::vector<int>{0, 1, 2, kUnreachableHop, kUnreachableHop});
        CHECK(hop_distances(net, 0, 0) ==
              std::vector<int>{0, kUnreachableHop, kUnreachableHop, kUnreachableHop,
                               kUnreachableHop});
    }
    SUBCASE("unreachable nodes keep the marker") {
        const Network split = load_network("4\n0 1 1\n");
        CHECK(hop_distances(split, 0) ==
              std::vector<int>{0, 1, kUnreachableHop, kUnreachableHop});
    }
}

TEST_CASE("min-cost path on the line") {
    const Network net = load_network(kLine5);
    const auto res = min_cost_path(net, 0, 4);
    REQUIRE(res.has_value());
    CHECK(res->cost == 4.0);
    CHECK(res->path == std::vector<NodeId>{0, 1, 2, 3, 4});
    CHECK(min_cost_path(net, 3, 3)->cost == 0.0);
    CHECK(min_cost_path(net, 3, 3)->path == std::vector<NodeId>{3});
}

TEST_CASE("equal-cost ties resolve to the lexicographically smallest path") {
    // Two unit-cost routes 0-1-3 and 0-2-3 around a square.
    const Network net = load_network("4\n0 1 1\n1 3 1\n0 2 1\n2 3 1\n");
    const auto res = min_cost_path(net, 0, 3);
    REQUIRE(res.has_value());
    CHECK(res->cost == 2.0);
    CHECK(res->path == std::vector<NodeId>{0, 1, 3});
}

TEST_CASE("restricted search stays inside the allowed set") {
    const Network net = load_network("4\n0 1 1\n1 3 1\n0 2 1\n2 3 1\n");
    const std::vector<NodeId> allowed{0, 2, 3};
    const auto res = min_cost_path(net, 0, 3, allowed);
    REQUIRE(res.has_value());
    CHECK(res->path == std::vector<NodeId>{0, 2, 3});

    const std::vector<NodeId> tiny{0, 3};
    CHECK(!min_cost_path(net, 0, 3, tiny).has_value());
    CHECK_THROWS_AS(min_cost_path(net, 0, 1, tiny), std::invalid_argument);
}

TEST_CASE("min-cost path agrees with brute-force enumeration") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        TopologyParams p;
        p.n = 8;
        p.target_avg_degree = 3.0;
        p.cost_min = 1;
        p.cost_max = 5;
        p.seed = seed;
        const Network net = generate_random_network(p);
        const auto arcs = testutil::arcs_of_network(net);
        for (NodeId u = 0; u < net.node_count(); ++u) {
            for (NodeId v = 0; v < net.node_count(); ++v) {
                const auto got = min_cost_path(net, u, v);
                const auto want = testutil::brute_shortest(net.node_count(), arcs, u, v);
                REQUIRE(got.has_value() == want.has_value());
                if (got) {
                    CHECK(got->cost == want->first);
                    CHECK(got->path == want->second);
                }
            }
        }
    }
}

TEST_CASE("generator determinism and parameter validation") {
    TopologyParams p;
    p.n = 60;
    p.target_avg_degree = 6.0;
    p.seed = 7;
    const Network a = generate_random_network(p);
    const Network b = generate_random_network(p);
    CHECK(write_edge_list(a) == write_edge_list(b));
    p.seed = 8;
    const Network c = generate_random_network(p);
    CHECK(write_edge_list(a) != write_edge_list(c));

    SUBCASE("invalid parameters are rejected") {
        TopologyParams bad = p;
        bad.n = 0;
        CHECK_THROWS_AS(generate_random_network(bad), std::invalid_argument);
        bad = p;
        bad.target_avg_degree = 0.0;
        CHECK_THROWS_AS(generate_random_network(bad), std::invalid_argument);
        bad = p;
        bad.target_avg_degree = 60.0;  // >= n
        CHECK_THROWS_AS(generate_random_network(bad), std::invalid_argument);
        bad = p;
        bad.cost_min = 0;
        CHECK_THROWS_AS(generate_random_network(bad), std::invalid_argument);
        bad = p;
        bad.cost_min = 5;
        bad.cost_max = 4;
        CHECK_THROWS_AS(generate_random_network(bad), std::invalid_argument);
    }

    SUBCASE("a single node accepts any degree target and has no edges") {
        TopologyParams one;
        one.n = 1;
        one.target_avg_degree = 8.0;
        const Network net = generate_random_network(one);
        CHECK(net.node_count() == 1);
        CHECK(net.edges().empty());
    }
}

TEST_CASE("generator output: unit-square positions, cost range, degree calibration") {
    TopologyParams p;
    p.n = 100;
    p.target_avg_degree = 8.0;
    p.cost_min = 2;
    p.cost_max = 9;
    p.seed = 42;
    const Network net = generate_random_network(p);

    REQUIRE(net.positions().has_value());
    for (const auto& q : *net.positions()) {
        CHECK(q.x >= 0.0);
        CHECK(q.x < 1.0);
        CHECK(q.y >= 0.0);
        CHECK(q.y < 1.0);
    }
    for (const auto& e : net.edges()) {
        CHECK(e.cost >= 2.0);
        CHECK(e.cost <= 9.0);
        CHECK(e.cost == std::floor(e.cost));  // integer costs
    }
    // Average degree tracks the target (border effects pull it slightly
    // below); a calibration bug by a factor of two would land far outside.
    double mean_degree = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TopologyParams q = p;
        q.seed = seed;
        const Network sample = generate_random_network(q);
        mean_degree += 2.0 * static_cast<double>(sample.edges().size()) / q.n;
    }
    mean_degree /= 10.0;
    CHECK(mean_degree > 5.5);
    CHECK(mean_degree < 9.0);
}

TEST_CASE("geometric links respect the connection radius") {
    TopologyParams p;
    p.n = 50;
    p.target_avg_degree = 5.0;
    p.seed = 3;
    const Network net = generate_random_network(p);
    REQUIRE(net.positions().has_value());
    const auto& pos = *net.positions();
    const double rho2 = p.target_avg_degree / (std::acos(-1.0) * (p.n - 1));
    std::set<std::pair<NodeId, NodeId>> linked;
    for (const auto& e : net.edges()) linked.insert({e.u, e.v});
    for (NodeId u = 0; u < p.n; ++u) {
        for (NodeId v = u + 1; v < p.n; ++v) {
            const double dx = pos[static_cast<std::size_t>(u)].x - pos[static_cast<std::size_t>(v)].x;
            const double dy = pos[static_cast<std::size_t>(u)].y - pos[static_cast<std::size_t>(v)].y;
            const bool within = dx * dx + dy * dy <= rho2;
            CHECK(linked.count({u, v}) == (within ? 1u : 0u));
        }
    }
}
