#include "zrpsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "zrpsim/format.hpp"
#include "zrpsim/shortest_path.hpp"

namespace zrpsim {

Network Network::create(int node_count, std::vector<Edge> edges,
                        std::optional<std::vector<Position>> positions) {
    if (node_count < 0) throw std::invalid_argument("node count must be non-negative");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!(e.cost > 0.0)) throw std::invalid_argument("edge cost must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw std::invalid_argument("duplicate edge");
    if (positions && static_cast<int>(positions->size()) != node_count)
        throw std::invalid_argument("positions size mismatch");

    Network net;
    net.n_ = node_count;
    net.edges_ = std::move(edges);
    net.positions_ = std::move(positions);
    net.adj_.assign(static_cast<std::size_t>(node_count), {});
    for (const auto& e : net.edges_) {
        net.adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.cost});
        net.adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.cost});
    }
    for (auto& nbrs : net.adj_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    return net;
}

std::optional<double> Network::edge_cost(NodeId u, NodeId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    const auto it = std::lower_bound(
        nbrs.begin(), nbrs.end(), v,
        [](const Neighbor& a, NodeId b) { return a.to < b; });
    if (it == nbrs.end() || it->to != v) return std::nullopt;
    return it->cost;
}

double Network::max_edge_cost() const {
    double best = 1.0;
    for (const auto& e : edges_) best = std::max(best, e.cost);
    return best;
}

Network generate_random_network(const TopologyParams& p) {
    if (p.n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(p.target_avg_degree > 0.0))
        throw std::invalid_argument("target_avg_degree must be positive");
    // A single node has no pairs, so any positive degree target is accepted.
    if (p.n > 1 && p.target_avg_degree >= p.n)
        throw std::invalid_argument("target_avg_degree must be below n");
    if (p.cost_min < 1 || p.cost_min > p.cost_max)
        throw std::invalid_argument("cost range must satisfy 1 <= cost_min <= cost_max");

    Rng rng(p.seed);
    std::vector<Position> pos(static_cast<std::size_t>(p.n));
    for (auto& q : pos) {
        q.x = rng.uniform01();
        q.y = rng.uniform01();
    }

    std::vector<Edge> edges;
    if (p.n > 1) {
        // pi * rho^2 * (n - 1) = target degree, ignoring border effects.
        const double rho2 = p.target_avg_degree / (std::numbers::pi * (p.n - 1));
        for (NodeId u = 0; u < p.n; ++u) {
            for (NodeId v = u + 1; v < p.n; ++v) {
                const double dx = pos[static_cast<std::size_t>(u)].x - pos[static_cast<std::size_t>(v)].x;
                const double dy = pos[static_cast<std::size_t>(u)].y - pos[static_cast<std::size_t>(v)].y;
                if (dx * dx + dy * dy <= rho2) {
                    const auto c = static_cast<double>(rng.uniform_int(p.cost_min, p.cost_max));
                    edges.push_back({u, v, c});
                }
            }
        }
    }
    return Network::create(p.n, std::move(edges), std::move(pos));
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, int line_no) {
    throw std::runtime_error(what + " at line " + std::to_string(line_no));
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Network load_network(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<std::pair<NodeId, NodeId>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            long long count = 0;
            if (!(fields >> count) || !(fields >> std::ws).eof() || count < 1)
                parse_fail("invalid node count", line_no);
            n = static_cast<int>(count);
            continue;
        }
        long long u = 0, v = 0, cost = 0;
        if (!(fields >> u >> v >> cost) || !(fields >> std::ws).eof())
            parse_fail("malformed line", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail("node index out of range", line_no);
        if (u == v) parse_fail("self-loop", line_no);
        if (cost < 1) parse_fail("non-positive cost", line_no);
        NodeId lo = static_cast<NodeId>(u), hi = static_cast<NodeId>(v);
        if (lo > hi) std::swap(lo, hi);
        if (!seen.insert({lo, hi}).second) parse_fail("duplicate edge", line_no);
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v),
                         static_cast<double>(cost)});
    }
    if (n < 0) throw std::runtime_error("missing node count at line 1");
    return Network::create(n, std::move(edges));
}

std::string write_edge_list(const Network& net) {
    std::string out = std::to_string(net.node_count());
    out.push_back('\n');
    for (const auto& e : net.edges()) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back(' ');
        out += format_double(e.cost);
        out.push_back('\n');
    }
    return out;
}

std::vector<int> hop_distances(const Network& net, NodeId u, int max_hops) {
    if (u < 0 || u >= net.node_count())
        throw std::invalid_argument("hop_distances: node out of range");
    std::vector<int> dist(static_cast<std::size_t>(net.node_count()), kUnreachableHop);
    dist[static_cast<std::size_t>(u)] = 0;
    std::queue<NodeId> frontier;
    frontier.push(u);
    while (!frontier.empty()) {
        const NodeId x = frontier.front();
        frontier.pop();
        const int d = dist[static_cast<std::size_t>(x)];
        if (max_hops >= 0 && d == max_hops) continue;
        for (const auto& nb : net.neighbors(x)) {
            if (dist[static_cast<std::size_t>(nb.to)] != kUnreachableHop) continue;
            dist[static_cast<std::size_t>(nb.to)] = d + 1;
            frontier.push(nb.to);
        }
    }
    return dist;
}

std::optional<PathResult> min_cost_path(const Network& net, NodeId u, NodeId v) {
    if (u < 0 || u >= net.node_count() || v < 0 || v >= net.node_count())
        throw std::invalid_argument("min_cost_path: node out of range");
    const auto arcs = [&](NodeId x) { return net.neighbors(x); };
    return detail::shortest_path_lex(net.node_count(), u, v, arcs, arcs);
}

std::optional<PathResult> min_cost_path(const Network& net, NodeId u, NodeId v,
                                        std::span<const NodeId> allowed) {
    if (u < 0 || u >= net.node_count() || v < 0 || v >= net.node_count())
        throw std::invalid_argument("min_cost_path: node out of range");
    std::vector<char> mask(static_cast<std::size_t>(net.node_count()), 0);
    for (NodeId x : allowed) {
        if (x < 0 || x >= net.node_count())
            throw std::invalid_argument("min_cost_path: allowed node out of range");
        mask[static_cast<std::size_t>(x)] = 1;
    }
    if (!mask[static_cast<std::size_t>(u)] || !mask[static_cast<std::size_t>(v)])
        throw std::invalid_argument("min_cost_path: endpoints must be allowed");
    const auto arcs = [&](NodeId x) { return net.neighbors(x); };
    return detail::shortest_path_lex(net.node_count(), u, v, arcs, arcs, &mask);
}

}  // namespace zrpsim
