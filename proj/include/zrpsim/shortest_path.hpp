#pragma once
// Dijkstra with a deterministic tie-break: among all minimum-cost paths the
// lexicographically smallest node sequence wins. Works on any arc provider
// with `.to` / `.cost` members; used for both the physical graph and the
// directed bordercast overlay.

#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zrpsim/topology.hpp"

namespace zrpsim {
namespace detail {

inline constexpr double kInfCost = std::numeric_limits<double>::infinity();
// Costs in this project are integer-valued, so sums compare exactly; the
// epsilon only guards against future non-integer weights.
inline constexpr double kCostEps = 1e-9;

template <class Arcs>
std::vector<double> dijkstra_distances(int n, NodeId source, Arcs&& arcs,
                                       const std::vector<char>* allowed) {
    std::vector<double> dist(static_cast<std::size_t>(n), kInfCost);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        for (const auto& arc : arcs(u)) {
            if (allowed && !(*allowed)[static_cast<std::size_t>(arc.to)]) continue;
            const double nd = d + arc.cost;
            if (nd < dist[static_cast<std::size_t>(arc.to)]) {
                dist[static_cast<std::size_t>(arc.to)] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return dist;
}

// fwd(u) yields outgoing arcs of u, rev(u) incoming arcs (as {from, cost}).
// For undirected graphs pass the same adjacency twice.
template <class FwdArcs, class RevArcs>
std::optional<PathResult> shortest_path_lex(int n, NodeId src, NodeId dst,
                                            FwdArcs&& fwd, RevArcs&& rev,
                                            const std::vector<char>* allowed = nullptr) {
    auto ok = [&](NodeId x) {
        return !allowed || (*allowed)[static_cast<std::size_t>(x)];
    };
    if (!ok(src) || !ok(dst)) return std::nullopt;
    if (src == dst) return PathResult{0.0, {src}};

    const std::vector<double> to_dst = dijkstra_distances(n, dst, rev, allowed);
    const double total = to_dst[static_cast<std::size_t>(src)];
    if (total == kInfCost) return std::nullopt;

    // Strictly positive arc costs make the remaining distance strictly
    // decrease along any optimal path, so greedily taking the smallest
    // consistent successor yields the lexicographically smallest sequence
    // and always terminates.
    std::vector<NodeId> path{src};
    NodeId cur = src;
    double acc = 0.0;
    while (cur != dst) {
        NodeId best = -1;
        double best_cost = 0.0;
        for (const auto& arc : fwd(cur)) {
            if (!ok(arc.to)) continue;
            const double rest = to_dst[static_cast<std::size_t>(arc.to)];
            if (rest == kInfCost) continue;
            if (std::abs(acc + arc.cost + rest - total) <= kCostEps) {
                if (best < 0 || arc.to < best) {
                    best = arc.to;
                    best_cost = arc.cost;
                }
            }
        }
        if (best < 0) throw std::logic_error("shortest_path_lex: inconsistent distances");
        acc += best_cost;
        cur = best;
        path.push_back(cur);
    }
    return PathResult{total, std::move(path)};
}

}  // namespace detail
}  // namespace zrpsim
