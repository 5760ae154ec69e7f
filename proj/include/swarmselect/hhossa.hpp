#pragma once

#include <Eigen/Core>
#include <utility>

#include "swarmselect/hho.hpp"
#include "swarmselect/optimize.hpp"
#include "swarmselect/rng.hpp"
#include "swarmselect/ssa.hpp"

namespace swarmselect {

struct HybridConfig {
    int population = 30;
    int hho_iterations = 100;
    int ssa_iterations = 20;
    Eigen::Index dim = 0;
    double lb = 0.0;
    double ub = 1.0;
    double beta = 1.5;

    void validate() const;

    HhoConfig hho() const {
        return HhoConfig{population, hho_iterations, dim, lb, ub, beta};
    }
    SsaConfig ssa() const { return SsaConfig{population, ssa_iterations, dim, lb, ub}; }
};

/// Inner refinement: seed a salp chain from a copy of the current hawks
/// (best cached fitness first, so the best hawk leads), run ssa_iters steps
/// against the same objective, and return the chain's food. The hawk
/// population is left untouched.
std::pair<Eigen::VectorXd, double> hybrid_refine(const HawkPopulation& pop, int ssa_iters,
                                                 const HybridConfig& cfg,
                                                 CountingFitness& fitness, RandomSource& rng);

/// HHO outer loop with SSA refinement each iteration. When the inner search
/// beats the rabbit strictly, the rabbit takes the refined position and the
/// worst hawk is replaced by it, so the improvement joins the population
/// future random picks sample from. Acceptance events are recorded in the
/// result.
OptResult hhossa_run(const HybridConfig& cfg, const FitnessFn& fitness, RandomSource& rng);

}  // namespace swarmselect
