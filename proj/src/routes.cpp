#include "zrpsim/routes.hpp"

#include <stdexcept>

namespace zrpsim {

bool route_well_formed(const Route& route, NodeId source, NodeId destination) {
    const auto& g = route.genes;
    if (g.size() < 2) return false;
    if (g.front() != source || g.back() != destination) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i] == g[j]) return false;
    return true;
}

PenaltyPolicy dominating_penalty(const Network& net, int radius) {
    if (radius < 1) throw std::invalid_argument("dominating_penalty: radius must be >= 1");
    return PenaltyPolicy{
        static_cast<double>(net.node_count()) * radius * net.max_edge_cost() + 1.0};
}

double evaluate_fitness(const Route& route, const BordercastOverlay& overlay,
                        const PenaltyPolicy& penalty) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < route.genes.size(); ++i) {
        const auto cost = overlay.arc_cost(route.genes[i], route.genes[i + 1]);
        total += cost ? *cost : penalty.per_missing_link;
    }
    return total;
}

std::vector<NodeId> loop_erase(std::span<const NodeId> seq) {
    std::vector<NodeId> out;
    out.reserve(seq.size());
    for (NodeId x : seq) {
        bool seen = false;
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (out[k] == x) {
                out.resize(k + 1);
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(x);
    }
    return out;
}

std::vector<NodeId> loop_erased_walk(const BordercastOverlay& overlay, NodeId start,
                                     Rng& rng, int max_steps,
                                     const std::vector<char>* forbidden) {
    const NodeId dst = overlay.destination();
    std::vector<NodeId> genes{start};
    if (start == dst) return genes;

    std::vector<char> on_path(static_cast<std::size_t>(overlay.node_count()), 0);
    on_path[static_cast<std::size_t>(start)] = 1;
    std::vector<NodeId> options;
    NodeId cur = start;
    for (int step = 0; step < max_steps && cur != dst; ++step) {
        options.clear();
        for (const auto& arc : overlay.arcs_from(cur))
            if (!forbidden || !(*forbidden)[static_cast<std::size_t>(arc.to)])
                options.push_back(arc.to);
        if (options.empty()) break;
        const NodeId next = options[rng.uniform_index(options.size())];
        if (on_path[static_cast<std::size_t>(next)]) {
            std::size_t k = 0;
            while (genes[k] != next) ++k;
            for (std::size_t i = k + 1; i < genes.size(); ++i)
                on_path[static_cast<std::size_t>(genes[i])] = 0;
            genes.resize(k + 1);
        } else {
            genes.push_back(next);
            on_path[static_cast<std::size_t>(next)] = 1;
        }
        cur = next;
    }
    // The walk stops on arrival, so the destination can never already sit
    // mid-sequence here.
    if (genes.back() != dst) genes.push_back(dst);
    return genes;
}

Route random_route(const BordercastOverlay& overlay, NodeId source,
                   NodeId destination, Rng& rng, int max_steps) {
    if (destination != overlay.destination())
        throw std::invalid_argument("random_route: overlay built for a different destination");
    if (source == destination)
        throw std::invalid_argument("random_route: source equals destination");
    if (source < 0 || source >= overlay.node_count())
        throw std::invalid_argument("random_route: source out of range");
    if (max_steps < 2) throw std::invalid_argument("random_route: max_steps must be >= 2");
    return Route{loop_erased_walk(overlay, source, rng, max_steps)};
}

std::optional<std::vector<NodeId>> decode_physical_path(const Route& route,
                                                        const ZoneTable& zones) {
    if (route.genes.size() < 2) return std::nullopt;
    const NodeId dst = route.genes.back();
    std::vector<NodeId> phys{route.genes.front()};
    for (std::size_t i = 0; i + 1 < route.genes.size(); ++i) {
        const NodeId a = route.genes[i];
        const NodeId b = route.genes[i + 1];
        if (a < 0 || a >= static_cast<NodeId>(zones.size())) return std::nullopt;
        const Zone& zone = zones[static_cast<std::size_t>(a)];
        const bool linked =
            zone.is_peripheral(b) || (b == dst && b != a && zone.contains(b));
        if (!linked) return std::nullopt;
        const auto& seg = zone.iarp.at(b).path;
        phys.insert(phys.end(), seg.begin() + 1, seg.end());
    }
    return phys;
}

}  // namespace zrpsim
