#pragma once
// Routing zones and the bordercast overlay. Every node owns a zone of hop
// radius r; proactive intra-zone routing supplies min-cost segments to the
// zone's peripheral nodes, and inter-zone discovery searches the directed
// overlay graph whose arcs are exactly those bordercast hops.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "zrpsim/topology.hpp"

namespace zrpsim {

struct ZoneParams {
    int radius = 2;
};

struct IarpEntry {
    double cost;
    std::vector<NodeId> path;  // physical path from the zone center
};

struct Zone {
    NodeId center = 0;
    std::vector<NodeId> members;     // sorted, includes the center
    std::map<NodeId, int> hop_of;    // member -> hop distance from center
    std::vector<NodeId> peripheral;  // sorted
    std::map<NodeId, IarpEntry> iarp;

    bool contains(NodeId v) const;
    bool is_peripheral(NodeId v) const;
};

using ZoneTable = std::vector<Zone>;

// BFS truncated at the zone radius. Peripheral nodes sit at hop exactly r;
// when the reachable component is smaller than that, the outermost hop shell
// stands in so every non-singleton zone can still bordercast outward.
Zone build_zone(const Network& net, NodeId center, const ZoneParams& params);
ZoneTable build_zone_table(const Network& net, const ZoneParams& params);

struct OverlayArc {
    NodeId to;
    double cost;
};

// Directed graph of bordercast hops toward one fixed destination. Each node
// links to the peripheral nodes of its own zone and, when the destination is
// already a zone member, directly to the destination; the arc cost is the
// intra-zone min-cost segment cost, so it is always strictly positive.
class BordercastOverlay {
public:
    BordercastOverlay(std::shared_ptr<const ZoneTable> zones, NodeId destination,
                      std::vector<std::vector<OverlayArc>> arcs);

    int node_count() const { return static_cast<int>(arcs_.size()); }
    NodeId destination() const { return destination_; }
    std::span<const OverlayArc> arcs_from(NodeId u) const {
        return arcs_[static_cast<std::size_t>(u)];
    }
    std::optional<double> arc_cost(NodeId from, NodeId to) const;
    const ZoneTable& zones() const { return *zones_; }
    std::shared_ptr<const ZoneTable> zones_ptr() const { return zones_; }

private:
    std::shared_ptr<const ZoneTable> zones_;
    NodeId destination_;
    std::vector<std::vector<OverlayArc>> arcs_;  // sorted by .to per node
};

BordercastOverlay build_overlay(std::shared_ptr<const ZoneTable> zones,
                                NodeId destination);

}  // namespace zrpsim
