#include "swarmselect/hhossa.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "swarmselect/errors.hpp"

namespace swarmselect {

void HybridConfig::validate() const {
    hho().validate();
    SsaConfig s = ssa();
    s.validate();
}

std::pair<Eigen::VectorXd, double> hybrid_refine(const HawkPopulation& pop, int ssa_iters,
                                                 const HybridConfig& cfg,
                                                 CountingFitness& fitness, RandomSource& rng) {
    if (ssa_iters < 0) throw ConfigError("ssa iterations must be >= 0");

    // seed the chain from a copy of the hawks, best cached fitness first
    std::vector<int> order(static_cast<std::size_t>(pop.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&pop](int a, int b) {
        return pop.fitness(a) != pop.fitness(b) ? pop.fitness(a) < pop.fitness(b) : a < b;
    });
    Eigen::MatrixXd seeded(pop.positions.rows(), pop.size());
    Eigen::VectorXd seeded_fitness(pop.size());
    for (int i = 0; i < pop.size(); ++i) {
        seeded.col(i) = pop.positions.col(order[static_cast<std::size_t>(i)]);
        seeded_fitness(i) = pop.fitness(order[static_cast<std::size_t>(i)]);
    }

    SsaConfig scfg = cfg.ssa();
    scfg.iterations = ssa_iters;
    const OptResult inner =
        ssa_optimize(scfg, init_salps_seeded(seeded, &seeded_fitness, fitness), fitness, rng);
    return {inner.best_position, inner.best_fitness};
}

OptResult hhossa_run(const HybridConfig& cfg, const FitnessFn& fitness, RandomSource& rng) {
    cfg.validate();
    const HhoConfig hho_cfg = cfg.hho();
    CountingFitness counting(fitness);
    HawkPopulation pop = init_hawks(hho_cfg, counting, rng);

    OptResult result;
    result.trace.reserve(static_cast<std::size_t>(cfg.hho_iterations) + 1);
    result.trace.push_back(pop.rabbit_fitness);
    for (int t = 0; t < cfg.hho_iterations; ++t) {
        hho_step(pop, t, cfg.hho_iterations, hho_cfg, counting, rng);
        const auto [refined, refined_fitness] =
            hybrid_refine(pop, cfg.ssa_iterations, cfg, counting, rng);
        if (refined_fitness < pop.rabbit_fitness) {
            result.acceptances.push_back({t, pop.rabbit_fitness, refined_fitness});
            pop.rabbit = refined;
            pop.rabbit_fitness = refined_fitness;
            // fold the refined solution into the swarm via the worst hawk
            Eigen::Index worst = 0;
            pop.fitness.maxCoeff(&worst);
            pop.positions.col(worst) = refined;
            pop.fitness(worst) = refined_fitness;
        }
        result.trace.push_back(pop.rabbit_fitness);
    }
    result.best_position = pop.rabbit;
    result.best_fitness = pop.rabbit_fitness;
    result.n_evaluations = counting.count();
    return result;
}

}  // namespace swarmselect
