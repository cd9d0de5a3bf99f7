#pragma once
// Seeded trials and size sweeps comparing the engines, with a Dijkstra
// oracle on the overlay as ground truth. Paired design: every engine in a
// sweep cell sees the same network instance, endpoint pair, and initial
// population seed.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zrpsim/eda.hpp"

namespace zrpsim {

enum class EngineKind { Ga, EdaUmda, EdaGauss };

const char* engine_name(EngineKind kind);
std::optional<EngineKind> parse_engine_name(std::string_view name);

struct EndpointSamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrialConfig {
    std::variant<TopologyParams, std::shared_ptr<const Network>> topology;
    int radius = 2;
    // Fixed endpoints, or nullopt to sample a connected pair from trial_seed.
    std::optional<std::pair<NodeId, NodeId>> endpoints;
    EngineKind engine = EngineKind::Ga;
    GaParams ga;
    EdaParams eda;
    std::uint64_t trial_seed = 1;
};

struct TrialResult {
    EngineKind engine = EngineKind::Ga;
    int n = 0;
    int radius = 0;
    NodeId source = 0;
    NodeId destination = 0;
    std::uint64_t trial_seed = 0;
    int repeat = -1;  // sweep repeat index; -1 outside sweeps
    RunRecord run;
    std::optional<double> oracle_cost;
    std::optional<double> oracle_gap;  // best_fitness - oracle_cost, >= 0
};

// Overlay shortest path with the same lexicographic tie-break as the
// physical-graph search; nullopt when the destination is unreachable.
std::optional<PathResult> oracle_shortest(const BordercastOverlay& overlay,
                                          NodeId source, NodeId destination);

// Uniform random distinct pair in the same connected component; throws
// EndpointSamplingError after max_attempts failures.
std::pair<NodeId, NodeId> sample_endpoints(const Network& net, Rng& rng,
                                           int max_attempts = 200);

// First index g such that best_per_gen is constant on [g, g + stall_window);
// matches the in-run termination rule of both engines.
std::optional<int> detect_convergence(const std::vector<double>& best_per_gen,
                                      int stall_window);

RunRecord dispatch_engine(EngineKind kind, const BordercastOverlay& overlay,
                          NodeId source, NodeId destination, const GaParams& ga,
                          const EdaParams& eda, const PenaltyPolicy& penalty);

TrialResult run_trial(const TrialConfig& config);

struct SweepCell {
    int n = 0;
    EngineKind engine = EngineKind::Ga;
    int repeats = 0;
    double mean_generations = 0.0;
    double std_generations = 0.0;  // population std; 0 for a single repeat
    int converged_count = 0;
    double mean_best = 0.0;
    double std_best = 0.0;
    // Element-wise mean of avg_per_gen across repeats; shorter histories are
    // padded with their final value so every generation averages over all
    // repeats.
    std::vector<double> mean_avg_curve;
};

struct SweepSummary {
    std::vector<SweepCell> cells;     // ordered by (size, engine order given)
    std::vector<TrialResult> trials;  // ordered by (size, repeat, engine)
};

// Runs repeats trials per size and engine. base must carry TopologyParams;
// its n and seed are replaced per cell with seeds derived from
// base.trial_seed, the size, and the repeat index.
SweepSummary sweep(const std::vector<int>& sizes, int repeats,
                   const TrialConfig& base, const std::vector<EngineKind>& engines);

}  // namespace zrpsim
