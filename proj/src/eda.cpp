#include "zrpsim/eda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace zrpsim {

const std::map<NodeId, double>* DiscreteModel::marginal_at(int position) const {
    if (position < 1 || position > static_cast<int>(position_marginals.size()))
        return nullptr;
    return &position_marginals[static_cast<std::size_t>(position - 1)];
}

const GaussianStat* GaussianModel::stats_at(int position) const {
    if (position < 1 || position > static_cast<int>(position_stats.size()))
        return nullptr;
    return &position_stats[static_cast<std::size_t>(position - 1)];
}

std::vector<Individual> truncation_select(const std::vector<Individual>& population,
                                          double fraction) {
    if (population.empty())
        throw std::invalid_argument("truncation_select: empty population");
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("truncation_select: fraction must lie in (0, 1]");
    const auto keep = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(population.size())));

    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (population[a].fitness != population[b].fitness)
            return population[a].fitness < population[b].fitness;
        return a < b;
    });

    std::vector<Individual> selected;
    selected.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) selected.push_back(population[order[i]]);
    return selected;
}

namespace {

int deepest_position(const std::vector<Individual>& selected) {
    std::size_t max_len = 0;
    for (const auto& ind : selected)
        max_len = std::max(max_len, ind.route.genes.size());
    // Interior positions run 1 .. max_len - 2; deeper ones are never sampled
    // because sampled lengths cannot exceed the longest observed route.
    return static_cast<int>(max_len) - 2;
}

template <class K>
K sample_categorical(const std::map<K, double>& pmf, Rng& rng) {
    if (pmf.empty())
        throw std::invalid_argument("sample_categorical: empty distribution");
    const double r = rng.uniform01();
    double cum = 0.0;
    for (const auto& [value, p] : pmf) {
        cum += p;
        if (r < cum) return value;
    }
    return pmf.rbegin()->first;  // guards the floating-point remainder
}

GaussianStat fit_stat(const std::vector<double>& xs, bool sample_std) {
    const auto n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double denom = sample_std ? std::max(n - 1.0, 1.0) : n;
    return GaussianStat{mean, std::sqrt(ss / denom)};
}

}  // namespace

DiscreteModel estimate_umda(const std::vector<Individual>& selected) {
    if (selected.empty())
        throw std::invalid_argument("estimate_umda: empty selection");
    DiscreteModel model;
    const auto total = static_cast<double>(selected.size());

    std::map<int, int> length_count;
    for (const auto& ind : selected)
        ++length_count[static_cast<int>(ind.route.genes.size())];
    for (const auto& [len, count] : length_count)
        model.length_marginal[len] = static_cast<double>(count) / total;

    const int deepest = deepest_position(selected);
    for (int pos = 1; pos <= deepest; ++pos) {
        std::map<NodeId, int> counts;
        int have = 0;
        for (const auto& ind : selected) {
            if (static_cast<int>(ind.route.genes.size()) > pos) {
                ++counts[ind.route.genes[static_cast<std::size_t>(pos)]];
                ++have;
            }
        }
        std::map<NodeId, double> marginal;
        for (const auto& [value, count] : counts)
            marginal[value] = static_cast<double>(count) / static_cast<double>(have);
        model.position_marginals.push_back(std::move(marginal));
    }
    return model;
}

GaussianModel estimate_gaussian(const std::vector<Individual>& selected,
                                bool sample_std) {
    if (selected.empty())
        throw std::invalid_argument("estimate_gaussian: empty selection");
    GaussianModel model;

    std::vector<double> xs;
    xs.reserve(selected.size());
    for (const auto& ind : selected)
        xs.push_back(static_cast<double>(ind.route.genes.size()));
    model.length = fit_stat(xs, sample_std);

    const int deepest = deepest_position(selected);
    for (int pos = 1; pos <= deepest; ++pos) {
        xs.clear();
        for (const auto& ind : selected)
            if (static_cast<int>(ind.route.genes.size()) > pos)
                xs.push_back(static_cast<double>(
                    ind.route.genes[static_cast<std::size_t>(pos)]));
        model.position_stats.push_back(fit_stat(xs, sample_std));
    }
    return model;
}

std::vector<NodeId> sample_umda_raw(const DiscreteModel& model,
                                    const BordercastOverlay& overlay, NodeId source,
                                    NodeId destination, Rng& rng) {
    const int len = sample_categorical(model.length_marginal, rng);
    std::vector<NodeId> raw;
    raw.reserve(static_cast<std::size_t>(std::max(len, 2)));
    raw.push_back(source);
    for (int pos = 1; pos <= len - 2; ++pos) {
        const auto* marginal = model.marginal_at(pos);
        const NodeId gene =
            marginal ? sample_categorical(*marginal, rng)
                     : static_cast<NodeId>(rng.uniform_index(
                           static_cast<std::size_t>(overlay.node_count())));
        raw.push_back(gene);
    }
    raw.push_back(destination);
    return raw;
}

Route sample_umda(const DiscreteModel& model, const BordercastOverlay& overlay,
                  NodeId source, NodeId destination, Rng& rng) {
    return Route{loop_erase(sample_umda_raw(model, overlay, source, destination, rng))};
}

std::vector<NodeId> sample_gaussian_raw(const GaussianModel& model,
                                        const BordercastOverlay& overlay,
                                        NodeId source, NodeId destination, Rng& rng,
                                        int max_len) {
    if (max_len < 2)
        throw std::invalid_argument("sample_gaussian_raw: max_len must be >= 2");
    const auto draw_int = [&](const GaussianStat& st) {
        return static_cast<long long>(std::llround(rng.normal(st.mean, st.stddev)));
    };
    const long long len_draw = draw_int(model.length);
    const int len = static_cast<int>(
        std::clamp(len_draw, 2LL, static_cast<long long>(max_len)));

    std::vector<NodeId> raw;
    raw.reserve(static_cast<std::size_t>(len));
    raw.push_back(source);
    const long long hi = overlay.node_count() - 1;
    for (int pos = 1; pos <= len - 2; ++pos) {
        const auto* st = model.stats_at(pos);
        long long gene = st ? draw_int(*st)
                            : static_cast<long long>(rng.uniform_index(
                                  static_cast<std::size_t>(overlay.node_count())));
        raw.push_back(static_cast<NodeId>(std::clamp(gene, 0LL, hi)));
    }
    raw.push_back(destination);
    return raw;
}

Route sample_gaussian(const GaussianModel& model, const BordercastOverlay& overlay,
                      NodeId source, NodeId destination, Rng& rng, int max_len) {
    return Route{loop_erase(
        sample_gaussian_raw(model, overlay, source, destination, rng, max_len))};
}

RunRecord run_eda(const BordercastOverlay& overlay, NodeId source,
                  NodeId destination, const EdaParams& params,
                  const PenaltyPolicy& penalty) {
    if (params.population_size < 2)
        throw std::invalid_argument("run_eda: population size must be >= 2");
    if (params.max_generations < 1)
        throw std::invalid_argument("run_eda: max_generations must be >= 1");
    if (params.stall_window < 1)
        throw std::invalid_argument("run_eda: stall_window must be >= 1");
    if (!(params.selected_fraction > 0.0) || params.selected_fraction > 1.0)
        throw std::invalid_argument("run_eda: selected_fraction must lie in (0, 1]");

    Rng rng(params.seed);
    const int max_steps = default_max_walk_steps(overlay.node_count());
    std::vector<Individual> pop =
        init_population(overlay, source, destination, params.population_size,
                        penalty, rng, max_steps);

    RunRecord rec;
    rec.best_fitness = std::numeric_limits<double>::infinity();
    auto note_generation = [&](const std::vector<Individual>& gen_pop) {
        double sum = 0.0;
        for (const auto& ind : gen_pop) {
            sum += ind.fitness;
            if (ind.fitness < rec.best_fitness) {
                rec.best_fitness = ind.fitness;
                rec.best_route = ind.route;
            }
        }
        rec.best_per_gen.push_back(rec.best_fitness);
        rec.avg_per_gen.push_back(sum / static_cast<double>(gen_pop.size()));
    };
    auto stalled = [&]() {
        if (!best_history_stalled(rec.best_per_gen, params.stall_window)) return false;
        rec.converged_at =
            static_cast<int>(rec.best_per_gen.size()) - params.stall_window;
        return true;
    };

    note_generation(pop);
    if (!stalled()) {
        for (int gen = 1; gen <= params.max_generations; ++gen) {
            const std::vector<Individual> selected =
                truncation_select(pop, params.selected_fraction);
            std::vector<Individual> next;
            next.reserve(pop.size());
            if (params.variant == EdaVariant::Umda) {
                const DiscreteModel model = estimate_umda(selected);
                while (next.size() < pop.size()) {
                    Route r = sample_umda(model, overlay, source, destination, rng);
                    const double f = evaluate_fitness(r, overlay, penalty);
                    next.push_back({std::move(r), f});
                }
            } else {
                const GaussianModel model =
                    estimate_gaussian(selected, params.gaussian_sample_std);
                while (next.size() < pop.size()) {
                    Route r = sample_gaussian(model, overlay, source, destination,
                                              rng, max_steps);
                    const double f = evaluate_fitness(r, overlay, penalty);
                    next.push_back({std::move(r), f});
                }
            }
            pop = std::move(next);
            note_generation(pop);
            if (stalled()) break;
        }
    }
    rec.generations_used = static_cast<int>(rec.best_per_gen.size());
    return rec;
}

}  // namespace zrpsim
