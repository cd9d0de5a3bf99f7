#pragma once
// Estimation-of-distribution engine over route chromosomes. Each generation
// keeps the best fraction of the population by truncation, fits a
// probability model to it, and resamples the whole population from the
// model; the best individual ever seen is tracked outside the population.
//
// Two model variants: discrete per-position marginal frequencies with an
// explicit length marginal (UMDA), and a continuous mean/std model sampled
// through a normal draw with round-and-clamp. The continuous variant treats
// node ids as ordinals, which is exactly the crudeness under study.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zrpsim/ga.hpp"

namespace zrpsim {

enum class EdaVariant { Umda, Gaussian };

struct EdaParams {
    int population_size = 50;
    double selected_fraction = 0.5;
    int max_generations = 1000;
    int stall_window = 50;
    EdaVariant variant = EdaVariant::Umda;
    bool gaussian_sample_std = false;  // population std (divide by N) by default
    std::uint64_t seed = 1;
};

struct DiscreteModel {
    std::map<int, double> length_marginal;
    // position_marginals[k] models gene position k + 1; the marginal for a
    // position is estimated only from routes long enough to have that
    // position, so the per-position frequencies are exact ratios.
    std::vector<std::map<NodeId, double>> position_marginals;

    // Marginal for a 1-based interior gene position; nullptr beyond depth.
    const std::map<NodeId, double>* marginal_at(int position) const;
};

struct GaussianStat {
    double mean = 0.0;
    double stddev = 0.0;
};

struct GaussianModel {
    GaussianStat length;
    std::vector<GaussianStat> position_stats;  // same position convention

    const GaussianStat* stats_at(int position) const;
};

// The ceil(fraction * M) lowest-fitness individuals; ties broken by the
// earlier population index. Returned in that selection order.
std::vector<Individual> truncation_select(const std::vector<Individual>& population,
                                          double fraction);

DiscreteModel estimate_umda(const std::vector<Individual>& selected);
GaussianModel estimate_gaussian(const std::vector<Individual>& selected,
                                bool sample_std = false);

// Raw gene tuple prior to loop erasure: endpoints fixed, interior positions
// drawn independently from their marginals, positions beyond the model's
// depth uniform over all overlay nodes. Exposed so the factorized sampling
// distribution itself is testable.
std::vector<NodeId> sample_umda_raw(const DiscreteModel& model,
                                    const BordercastOverlay& overlay, NodeId source,
                                    NodeId destination, Rng& rng);
Route sample_umda(const DiscreteModel& model, const BordercastOverlay& overlay,
                  NodeId source, NodeId destination, Rng& rng);

// Length and interior genes are rounded normal draws; the length is clamped
// to [2, max_len] and genes to the valid node id range.
std::vector<NodeId> sample_gaussian_raw(const GaussianModel& model,
                                        const BordercastOverlay& overlay,
                                        NodeId source, NodeId destination, Rng& rng,
                                        int max_len);
Route sample_gaussian(const GaussianModel& model, const BordercastOverlay& overlay,
                      NodeId source, NodeId destination, Rng& rng, int max_len);

RunRecord run_eda(const BordercastOverlay& overlay, NodeId source,
                  NodeId destination, const EdaParams& params,
                  const PenaltyPolicy& penalty);

}  // namespace zrpsim
