#include "zrpsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zrpsim/shortest_path.hpp"

namespace zrpsim {

const char* engine_name(EngineKind kind) {
    switch (kind) {
        case EngineKind::Ga: return "ga";
        case EngineKind::EdaUmda: return "eda-umda";
        case EngineKind::EdaGauss: return "eda-gauss";
    }
    return "unknown";
}

std::optional<EngineKind> parse_engine_name(std::string_view name) {
    if (name == "ga") return EngineKind::Ga;
    if (name == "eda-umda") return EngineKind::EdaUmda;
    if (name == "eda-gauss") return EngineKind::EdaGauss;
    return std::nullopt;
}

std::optional<PathResult> oracle_shortest(const BordercastOverlay& overlay,
                                          NodeId source, NodeId destination) {
    const int n = overlay.node_count();
    if (source < 0 || source >= n || destination < 0 || destination >= n)
        throw std::invalid_argument("oracle_shortest: node out of range");
    if (destination != overlay.destination())
        throw std::invalid_argument("oracle_shortest: overlay built for a different destination");

    std::vector<std::vector<OverlayArc>> rev(static_cast<std::size_t>(n));
    for (NodeId u = 0; u < n; ++u)
        for (const auto& arc : overlay.arcs_from(u))
            rev[static_cast<std::size_t>(arc.to)].push_back({u, arc.cost});

    const auto fwd_arcs = [&](NodeId x) { return overlay.arcs_from(x); };
    const auto rev_arcs = [&](NodeId x) -> const std::vector<OverlayArc>& {
        return rev[static_cast<std::size_t>(x)];
    };
    return detail::shortest_path_lex(n, source, destination, fwd_arcs, rev_arcs);
}

std::pair<NodeId, NodeId> sample_endpoints(const Network& net, Rng& rng,
                                           int max_attempts) {
    const int n = net.node_count();
    if (n >= 2) {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            const auto u = static_cast<NodeId>(rng.uniform_index(static_cast<std::size_t>(n)));
            const auto v = static_cast<NodeId>(rng.uniform_index(static_cast<std::size_t>(n)));
            if (u == v) continue;
            if (hop_distances(net, u)[static_cast<std::size_t>(v)] != kUnreachableHop)
                return {u, v};
        }
    }
    throw EndpointSamplingError("no connected source/destination pair found after " +
                                std::to_string(max_attempts) + " attempts");
}

std::optional<int> detect_convergence(const std::vector<double>& best_per_gen,
                                      int stall_window) {
    if (stall_window < 1)
        throw std::invalid_argument("detect_convergence: stall_window must be >= 1");
    const std::size_t n = best_per_gen.size();
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || best_per_gen[i] != best_per_gen[run_start]) {
            if (i - run_start >= static_cast<std::size_t>(stall_window))
                return static_cast<int>(run_start);
            run_start = i;
        }
    }
    return std::nullopt;
}

RunRecord dispatch_engine(EngineKind kind, const BordercastOverlay& overlay,
                          NodeId source, NodeId destination, const GaParams& ga,
                          const EdaParams& eda, const PenaltyPolicy& penalty) {
    switch (kind) {
        case EngineKind::Ga:
            return run_ga(overlay, source, destination, ga, penalty);
        case EngineKind::EdaUmda: {
            EdaParams p = eda;
            p.variant = EdaVariant::Umda;
            return run_eda(overlay, source, destination, p, penalty);
        }
        case EngineKind::EdaGauss: {
            EdaParams p = eda;
            p.variant = EdaVariant::Gaussian;
            return run_eda(overlay, source, destination, p, penalty);
        }
    }
    throw std::logic_error("dispatch_engine: unknown engine");
}

namespace {

std::shared_ptr<const Network> resolve_network(const TrialConfig& config) {
    if (std::holds_alternative<TopologyParams>(config.topology))
        return std::make_shared<const Network>(
            generate_random_network(std::get<TopologyParams>(config.topology)));
    auto net = std::get<std::shared_ptr<const Network>>(config.topology);
    if (!net) throw std::invalid_argument("run_trial: null network");
    return net;
}

std::pair<NodeId, NodeId> resolve_endpoints(const TrialConfig& config,
                                            const Network& net) {
    if (config.endpoints) {
        const auto [src, dst] = *config.endpoints;
        if (src < 0 || src >= net.node_count() || dst < 0 || dst >= net.node_count())
            throw std::invalid_argument("run_trial: endpoint out of range");
        if (src == dst)
            throw std::invalid_argument("run_trial: source equals destination");
        return {src, dst};
    }
    Rng rng(config.trial_seed);
    return sample_endpoints(net, rng);
}

struct Moments {
    double mean = 0.0;
    double std_dev = 0.0;
};

Moments population_moments(const std::vector<double>& xs) {
    if (xs.empty()) return {};
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(xs.size()))};
}

}  // namespace

TrialResult run_trial(const TrialConfig& config) {
    if (config.radius < 1)
        throw std::invalid_argument("run_trial: radius must be >= 1");
    const std::shared_ptr<const Network> net = resolve_network(config);
    const auto [src, dst] = resolve_endpoints(config, *net);

    const auto zones = std::make_shared<const ZoneTable>(
        build_zone_table(*net, ZoneParams{config.radius}));
    const BordercastOverlay overlay = build_overlay(zones, dst);
    const PenaltyPolicy penalty = dominating_penalty(*net, config.radius);

    TrialResult result;
    result.engine = config.engine;
    result.n = net->node_count();
    result.radius = config.radius;
    result.source = src;
    result.destination = dst;
    result.trial_seed = config.trial_seed;
    result.run = dispatch_engine(config.engine, overlay, src, dst, config.ga,
                                 config.eda, penalty);
    if (const auto oracle = oracle_shortest(overlay, src, dst)) {
        result.oracle_cost = oracle->cost;
        result.oracle_gap = result.run.best_fitness - oracle->cost;
    }
    return result;
}

SweepSummary sweep(const std::vector<int>& sizes, int repeats,
                   const TrialConfig& base, const std::vector<EngineKind>& engines) {
    if (sizes.empty()) throw std::invalid_argument("sweep: no sizes given");
    if (repeats < 1) throw std::invalid_argument("sweep: repeats must be >= 1");
    if (engines.empty()) throw std::invalid_argument("sweep: no engines given");
    if (!std::holds_alternative<TopologyParams>(base.topology))
        throw std::invalid_argument("sweep: base config must generate topologies");

    SweepSummary summary;
    // Reserved upfront: the per-size curve aggregation keeps pointers into
    // this vector, which must therefore never reallocate.
    summary.trials.reserve(sizes.size() * static_cast<std::size_t>(repeats) *
                           engines.size());
    for (const int size : sizes) {
        // Per-engine accumulators over the repeats of this size.
        std::vector<std::vector<double>> gens(engines.size());
        std::vector<std::vector<double>> bests(engines.size());
        std::vector<int> converged(engines.size(), 0);
        std::vector<std::vector<const std::vector<double>*>> curves(engines.size());

        for (int rep = 0; rep < repeats; ++rep) {
            const std::uint64_t cell_seed =
                derive_seed(base.trial_seed, static_cast<std::uint64_t>(size),
                            static_cast<std::uint64_t>(rep));
            TopologyParams tp = std::get<TopologyParams>(base.topology);
            tp.n = size;
            tp.seed = derive_seed(cell_seed, 1, 0);

            std::shared_ptr<const Network> net;
            std::pair<NodeId, NodeId> endpoints;
            try {
                net = std::make_shared<const Network>(generate_random_network(tp));
                if (base.endpoints) {
                    endpoints = *base.endpoints;
                    if (endpoints.first >= size || endpoints.second >= size)
                        throw std::invalid_argument("fixed endpoints exceed size");
                } else {
                    Rng er(derive_seed(cell_seed, 2, 0));
                    endpoints = sample_endpoints(*net, er);
                }
            } catch (const std::exception& e) {
                throw std::runtime_error("sweep: size " + std::to_string(size) +
                                         " repeat " + std::to_string(rep) + ": " +
                                         e.what());
            }

            const auto zones = std::make_shared<const ZoneTable>(
                build_zone_table(*net, ZoneParams{base.radius}));
            const BordercastOverlay overlay = build_overlay(zones, endpoints.second);
            const PenaltyPolicy penalty = dominating_penalty(*net, base.radius);
            const auto oracle =
                oracle_shortest(overlay, endpoints.first, endpoints.second);
            const std::uint64_t engine_seed = derive_seed(cell_seed, 3, 0);

            for (std::size_t e = 0; e < engines.size(); ++e) {
                GaParams ga = base.ga;
                ga.seed = engine_seed;
                EdaParams eda = base.eda;
                eda.seed = engine_seed;

                TrialResult tr;
                tr.engine = engines[e];
                tr.n = size;
                tr.radius = base.radius;
                tr.source = endpoints.first;
                tr.destination = endpoints.second;
                tr.trial_seed = cell_seed;
                tr.repeat = rep;
                tr.run = dispatch_engine(engines[e], overlay, endpoints.first,
                                         endpoints.second, ga, eda, penalty);
                if (oracle) {
                    tr.oracle_cost = oracle->cost;
                    tr.oracle_gap = tr.run.best_fitness - oracle->cost;
                }

                gens[e].push_back(static_cast<double>(tr.run.generations_used));
                bests[e].push_back(tr.run.best_fitness);
                if (tr.run.converged_at) ++converged[e];
                summary.trials.push_back(std::move(tr));
                curves[e].push_back(
                    &summary.trials.back().run.avg_per_gen);
            }
        }

        for (std::size_t e = 0; e < engines.size(); ++e) {
            SweepCell cell;
            cell.n = size;
            cell.engine = engines[e];
            cell.repeats = repeats;
            const Moments mg = population_moments(gens[e]);
            cell.mean_generations = mg.mean;
            cell.std_generations = mg.std_dev;
            const Moments mb = population_moments(bests[e]);
            cell.mean_best = mb.mean;
            cell.std_best = mb.std_dev;
            cell.converged_count = converged[e];

            std::size_t max_len = 0;
            for (const auto* curve : curves[e])
                max_len = std::max(max_len, curve->size());
            cell.mean_avg_curve.assign(max_len, 0.0);
            for (const auto* curve : curves[e])
                for (std::size_t g = 0; g < max_len; ++g)
                    cell.mean_avg_curve[g] +=
                        g < curve->size() ? (*curve)[g] : curve->back();
            for (double& x : cell.mean_avg_curve)
                x /= static_cast<double>(curves[e].size());
            summary.cells.push_back(std::move(cell));
        }
    }
    return summary;
}

}  // namespace zrpsim
