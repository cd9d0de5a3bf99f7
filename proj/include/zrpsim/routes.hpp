#pragma once
// Route chromosomes: variable-length node sequences over the bordercast
// overlay, built by loop-erased random walk, scored by summing overlay arc
// costs with a flat penalty for each missing link, and decodable back into
// physical paths.

#include <optional>
#include <span>
#include <vector>

#include "zrpsim/rng.hpp"
#include "zrpsim/zrp.hpp"

namespace zrpsim {

struct Route {
    std::vector<NodeId> genes;  // front() = source, back() = destination
};

// Endpoint and no-repeat checks; length must be at least 2.
bool route_well_formed(const Route& route, NodeId source, NodeId destination);

struct Individual {
    Route route;
    double fitness = 0.0;
};

struct PenaltyPolicy {
    double per_missing_link;
};

// Penalty large enough that every fully linked route scores below every
// route with a missing link: an overlay arc costs at most radius * max edge
// cost and a repeat-free route crosses at most n - 1 arcs.
PenaltyPolicy dominating_penalty(const Network& net, int radius);

// Sum of arc costs over consecutive gene pairs; absent arcs contribute the
// penalty instead. Lower is better and a zero-gap route equals the overlay
// shortest-path cost.
double evaluate_fitness(const Route& route, const BordercastOverlay& overlay,
                        const PenaltyPolicy& penalty);

// Step budget the engines give their walks; generous enough that truncation
// is rare even on tiny overlays.
inline int default_max_walk_steps(int node_count) {
    return node_count < 16 ? 16 : node_count;
}

// Removes cycles in visit order: re-entering a node drops everything after
// its first occurrence. Keeps the first element and, when the input ends at
// some node, still ends at that node.
std::vector<NodeId> loop_erase(std::span<const NodeId> seq);

// Loop-erased random walk over overlay arcs from start toward the overlay
// destination. Stops on arrival, when stuck, or after max_steps arc
// traversals; if the destination was not reached it is appended anyway and
// the dangling link is paid for through the penalty rather than repaired.
// Nodes flagged in forbidden are never entered.
std::vector<NodeId> loop_erased_walk(const BordercastOverlay& overlay, NodeId start,
                                     Rng& rng, int max_steps,
                                     const std::vector<char>* forbidden = nullptr);

Route random_route(const BordercastOverlay& overlay, NodeId source,
                   NodeId destination, Rng& rng, int max_steps);

// Expands consecutive genes into their intra-zone segments, deduplicating
// the shared endpoints. nullopt when any consecutive pair has no overlay
// arc. The expansion mirrors the overlay arc rule exactly.
std::optional<std::vector<NodeId>> decode_physical_path(const Route& route,
                                                        const ZoneTable& zones);

}  // namespace zrpsim
