#include "zrpsim/zrp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace zrpsim {

bool Zone::contains(NodeId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool Zone::is_peripheral(NodeId v) const {
    return std::binary_search(peripheral.begin(), peripheral.end(), v);
}

Zone build_zone(const Network& net, NodeId center, const ZoneParams& params) {
    if (params.radius < 1) throw std::invalid_argument("zone radius must be >= 1");
    if (center < 0 || center >= net.node_count())
        throw std::invalid_argument("zone center out of range");

    const std::vector<int> hops = hop_distances(net, center, params.radius);
    Zone zone;
    zone.center = center;
    int max_hop = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        const int h = hops[static_cast<std::size_t>(v)];
        if (h == kUnreachableHop) continue;
        zone.members.push_back(v);
        zone.hop_of[v] = h;
        max_hop = std::max(max_hop, h);
    }
    // Nodes at hop exactly r; for a component shallower than r the outermost
    // shell plays that role. A singleton zone has no peripheral nodes.
    const int shell = std::min(params.radius, max_hop);
    if (shell > 0)
        for (NodeId v : zone.members)
            if (zone.hop_of[v] == shell) zone.peripheral.push_back(v);

    // Min-cost segments inside the zone's induced subgraph. Every member is
    // reachable there because its BFS path runs through closer members.
    for (NodeId v : zone.members) {
        auto seg = min_cost_path(net, center, v, zone.members);
        assert(seg.has_value());
        zone.iarp[v] = IarpEntry{seg->cost, std::move(seg->path)};
    }
    return zone;
}

ZoneTable build_zone_table(const Network& net, const ZoneParams& params) {
    ZoneTable table;
    table.reserve(static_cast<std::size_t>(net.node_count()));
    for (NodeId u = 0; u < net.node_count(); ++u)
        table.push_back(build_zone(net, u, params));
    return table;
}

BordercastOverlay::BordercastOverlay(std::shared_ptr<const ZoneTable> zones,
                                     NodeId destination,
                                     std::vector<std::vector<OverlayArc>> arcs)
    : zones_(std::move(zones)), destination_(destination), arcs_(std::move(arcs)) {}

std::optional<double> BordercastOverlay::arc_cost(NodeId from, NodeId to) const {
    if (from < 0 || from >= node_count() || to < 0 || to >= node_count())
        return std::nullopt;
    const auto& out = arcs_[static_cast<std::size_t>(from)];
    const auto it = std::lower_bound(
        out.begin(), out.end(), to,
        [](const OverlayArc& a, NodeId b) { return a.to < b; });
    if (it == out.end() || it->to != to) return std::nullopt;
    return it->cost;
}

BordercastOverlay build_overlay(std::shared_ptr<const ZoneTable> zones,
                                NodeId destination) {
    if (!zones) throw std::invalid_argument("build_overlay: null zone table");
    const int n = static_cast<int>(zones->size());
    if (destination < 0 || destination >= n)
        throw std::invalid_argument("build_overlay: destination out of range");

    std::vector<std::vector<OverlayArc>> arcs(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u) {
        const Zone& zone = (*zones)[static_cast<std::size_t>(u)];
        std::map<NodeId, double> out;  // dedups a destination that is also peripheral
        for (NodeId p : zone.peripheral)
            if (p != u) out[p] = zone.iarp.at(p).cost;
        if (destination != u && zone.contains(destination))
            out[destination] = zone.iarp.at(destination).cost;
        auto& row = arcs[static_cast<std::size_t>(u)];
        row.reserve(out.size());
        for (const auto& [to, cost] : out) row.push_back({to, cost});
    }
    return BordercastOverlay(std::move(zones), destination, std::move(arcs));
}

}  // namespace zrpsim
