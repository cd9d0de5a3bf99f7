#pragma once
// Random ad-hoc network topologies: geometric generation, edge-list I/O and
// the basic graph queries everything else builds on (hop distances and
// min-cost paths with deterministic tie-breaking).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zrpsim/rng.hpp"

namespace zrpsim {

using NodeId = int;

inline constexpr int kUnreachableHop = -1;

struct Edge {
    NodeId u;
    NodeId v;
    double cost;
};

struct Neighbor {
    NodeId to;
    double cost;
};

struct Position {
    double x;
    double y;
};

// Undirected weighted graph over dense node ids [0, n). Edges are stored
// canonically (u < v, sorted, unique) with strictly positive costs.
class Network {
public:
    static Network create(int node_count, std::vector<Edge> edges,
                          std::optional<std::vector<Position>> positions = std::nullopt);

    int node_count() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Neighbor> neighbors(NodeId u) const { return adj_[static_cast<std::size_t>(u)]; }
    std::optional<double> edge_cost(NodeId u, NodeId v) const;
    const std::optional<std::vector<Position>>& positions() const { return positions_; }
    double max_edge_cost() const;  // 1.0 for an edgeless network

private:
    Network() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
    std::optional<std::vector<Position>> positions_;
};

struct TopologyParams {
    int n = 0;
    double target_avg_degree = 8.0;
    int cost_min = 1;
    int cost_max = 10;
    std::uint64_t seed = 1;
};

// Random geometric graph on the unit square: nodes are uniform points,
// linked when within a connection radius calibrated so the expected average
// degree matches target_avg_degree. Integer edge costs are drawn uniformly
// from [cost_min, cost_max]. Deterministic in the params (seed included).
Network generate_random_network(const TopologyParams& params);

// Edge-list document: first line is the node count, each following non-empty
// line is "u v cost" with an integer cost >= 1; lines starting with '#' are
// comments. Throws std::runtime_error naming the offending 1-based line.
Network load_network(const std::string& text);
std::string write_edge_list(const Network& net);

// Unweighted BFS distances from u; kUnreachableHop marks unreachable nodes.
// max_hops < 0 means unbounded.
std::vector<int> hop_distances(const Network& net, NodeId u, int max_hops = -1);

struct PathResult {
    double cost;
    std::vector<NodeId> path;
};

// Minimum-cost path from u to v, ties broken toward the lexicographically
// smallest node sequence so results are reproducible everywhere. The second
// overload restricts the search to the subgraph induced by `allowed`
// (which must contain both endpoints). nullopt when unreachable.
std::optional<PathResult> min_cost_path(const Network& net, NodeId u, NodeId v);
std::optional<PathResult> min_cost_path(const Network& net, NodeId u, NodeId v,
                                        std::span<const NodeId> allowed);

}  // namespace zrpsim
