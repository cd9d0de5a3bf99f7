#include "zrpsim/ga.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace zrpsim {

bool best_history_stalled(const std::vector<double>& best_per_gen, int window) {
    if (window < 1 || static_cast<int>(best_per_gen.size()) < window) return false;
    const std::size_t end = best_per_gen.size();
    for (std::size_t i = end - static_cast<std::size_t>(window) + 1; i < end; ++i)
        if (best_per_gen[i] != best_per_gen[end - static_cast<std::size_t>(window)])
            return false;
    return true;
}

std::vector<Individual> init_population(const BordercastOverlay& overlay,
                                        NodeId source, NodeId destination,
                                        int population_size,
                                        const PenaltyPolicy& penalty, Rng& rng,
                                        int max_steps) {
    if (population_size < 2)
        throw std::invalid_argument("init_population: population size must be >= 2");
    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(population_size));
    for (int i = 0; i < population_size; ++i) {
        Route r = random_route(overlay, source, destination, rng, max_steps);
        const double f = evaluate_fitness(r, overlay, penalty);
        pop.push_back({std::move(r), f});
    }
    return pop;
}

const Individual& tournament_select(const std::vector<Individual>& population,
                                    int tournament_size, Rng& rng) {
    if (population.empty())
        throw std::invalid_argument("tournament_select: empty population");
    if (tournament_size < 1)
        throw std::invalid_argument("tournament_select: tournament size must be >= 1");
    std::size_t best = rng.uniform_index(population.size());
    for (int i = 1; i < tournament_size; ++i) {
        const std::size_t c = rng.uniform_index(population.size());
        if (population[c].fitness < population[best].fitness ||
            (population[c].fitness == population[best].fitness && c < best))
            best = c;
    }
    return population[best];
}

Route one_point_crossover(const Route& parent1, const Route& parent2, Rng& rng) {
    const auto& g1 = parent1.genes;
    const auto& g2 = parent2.genes;
    if (g1.size() < 2 || g2.size() < 2)
        throw std::invalid_argument("one_point_crossover: malformed parent");
    if (g1.front() != g2.front() || g1.back() != g2.back())
        throw std::invalid_argument("one_point_crossover: parents must share endpoints");

    // Shared interior genes, ascending so the uniform draw is deterministic.
    std::vector<NodeId> common;
    for (std::size_t i = 1; i + 1 < g1.size(); ++i)
        for (std::size_t j = 1; j + 1 < g2.size(); ++j)
            if (g1[i] == g2[j]) common.push_back(g1[i]);
    std::sort(common.begin(), common.end());

    std::vector<NodeId> raw;
    if (!common.empty()) {
        const NodeId cut = common[rng.uniform_index(common.size())];
        const auto p1 = std::find(g1.begin(), g1.end(), cut);
        const auto p2 = std::find(g2.begin(), g2.end(), cut);
        raw.assign(g1.begin(), p1 + 1);
        raw.insert(raw.end(), p2 + 1, g2.end());
    } else {
        const std::size_t i = 1 + rng.uniform_index(g1.size() - 1);
        const std::size_t j = 1 + rng.uniform_index(g2.size() - 1);
        raw.assign(g1.begin(), g1.begin() + static_cast<std::ptrdiff_t>(i));
        raw.insert(raw.end(), g2.begin() + static_cast<std::ptrdiff_t>(j), g2.end());
    }
    return Route{loop_erase(raw)};
}

Route mutate(const Route& route, const BordercastOverlay& overlay, Rng& rng,
             int max_steps) {
    const std::size_t len = route.genes.size();
    if (len <= 2) return route;  // nothing interior to regrow

    const std::size_t m = 1 + rng.uniform_index(len - 2);  // interior index
    std::vector<char> forbidden(static_cast<std::size_t>(overlay.node_count()), 0);
    for (std::size_t i = 0; i < m; ++i)
        forbidden[static_cast<std::size_t>(route.genes[i])] = 1;

    const std::vector<NodeId> suffix =
        loop_erased_walk(overlay, route.genes[m], rng, max_steps, &forbidden);
    Route out;
    out.genes.assign(route.genes.begin(),
                     route.genes.begin() + static_cast<std::ptrdiff_t>(m));
    out.genes.insert(out.genes.end(), suffix.begin(), suffix.end());
    return out;
}

namespace {

std::size_t best_index(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].fitness < pop[best].fitness) best = i;
    return best;
}

void validate_common(int population_size, int max_generations, int stall_window) {
    if (population_size < 2)
        throw std::invalid_argument("population size must be >= 2");
    if (max_generations < 1)
        throw std::invalid_argument("max_generations must be >= 1");
    if (stall_window < 1) throw std::invalid_argument("stall_window must be >= 1");
}

}  // namespace

RunRecord run_ga(const BordercastOverlay& overlay, NodeId source,
                 NodeId destination, const GaParams& params,
                 const PenaltyPolicy& penalty) {
    validate_common(params.population_size, params.max_generations,
                    params.stall_window);
    if (params.crossover_prob < 0.0 || params.crossover_prob > 1.0 ||
        params.mutation_prob < 0.0 || params.mutation_prob > 1.0)
        throw std::invalid_argument("run_ga: probabilities must lie in [0, 1]");
    if (params.tournament_size < 1)
        throw std::invalid_argument("run_ga: tournament size must be >= 1");

    Rng rng(params.seed);
    const int max_steps = default_max_walk_steps(overlay.node_count());
    std::vector<Individual> pop = init_population(
        overlay, source, destination, params.population_size, penalty, rng, max_steps);

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
            std::vector<Individual> next;
            next.reserve(pop.size());
            next.push_back(pop[best_index(pop)]);  // elite survives unchanged
            while (next.size() < pop.size()) {
                const Individual& a =
                    tournament_select(pop, params.tournament_size, rng);
                const Individual& b =
                    tournament_select(pop, params.tournament_size, rng);
                Route child = rng.bernoulli(params.crossover_prob)
                                  ? one_point_crossover(a.route, b.route, rng)
                                  : a.route;
                if (rng.bernoulli(params.mutation_prob))
                    child = mutate(child, overlay, rng, max_steps);
                const double f = evaluate_fitness(child, overlay, penalty);
                next.push_back({std::move(child), f});
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
