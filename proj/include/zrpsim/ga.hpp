#pragma once
// Generational genetic algorithm over route chromosomes: binary tournament
// selection, one-point crossover preferring a shared interior gene as the
// cut, suffix-regenerating mutation, a single elite, and dual termination
// (generation cap or a stalled best fitness).

#include <cstdint>
#include <optional>
#include <vector>

#include "zrpsim/routes.hpp"

namespace zrpsim {

struct GaParams {
    int population_size = 50;
    double crossover_prob = 0.9;
    double mutation_prob = 0.9;
    int max_generations = 1000;
    int stall_window = 50;
    int tournament_size = 2;
    std::uint64_t seed = 1;
};

struct RunRecord {
    std::vector<double> best_per_gen;  // best-so-far, hence non-increasing
    std::vector<double> avg_per_gen;   // population mean per generation
    Route best_route;
    double best_fitness = 0.0;
    std::optional<int> converged_at;   // first index of the stalled window
    int generations_used = 0;          // == best_per_gen.size()
};

// True when the trailing `window` entries exist and are all equal.
bool best_history_stalled(const std::vector<double>& best_per_gen, int window);

// Seeded population of loop-erased random walks, each already evaluated.
// Shared by both engine families so paired runs start identically.
std::vector<Individual> init_population(const BordercastOverlay& overlay,
                                        NodeId source, NodeId destination,
                                        int population_size,
                                        const PenaltyPolicy& penalty, Rng& rng,
                                        int max_steps);

// Winner of tournament_size uniform index draws with replacement (one
// rng.uniform_index(population size) per pick); ties on fitness go to the
// earlier population index.
const Individual& tournament_select(const std::vector<Individual>& population,
                                    int tournament_size, Rng& rng);

// Cut at a uniformly chosen shared interior gene when one exists (prefix of
// parent1 up to it, suffix of parent2 after it). Otherwise splice a uniform
// prefix of parent1 onto a uniform suffix of parent2; the junction may be a
// missing link, which the penalty handles. The result is loop-erased.
Route one_point_crossover(const Route& parent1, const Route& parent2, Rng& rng);

// Keeps a uniformly chosen prefix ending at an interior gene and regrows the
// remainder by a loop-erased walk that avoids the kept prefix.
Route mutate(const Route& route, const BordercastOverlay& overlay, Rng& rng,
             int max_steps);

RunRecord run_ga(const BordercastOverlay& overlay, NodeId source,
                 NodeId destination, const GaParams& params,
                 const PenaltyPolicy& penalty);

}  // namespace zrpsim
