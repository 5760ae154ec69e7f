#pragma once

#include <Eigen/Core>

#include "swarmselect/optimize.hpp"
#include "swarmselect/rng.hpp"

namespace swarmselect {

struct SsaConfig {
    int population = 30;
    int iterations = 20;
    Eigen::Index dim = 0;
    double lb = 0.0;
    double ub = 1.0;

    void validate() const;
};

/// Ordered salp chain: column 0 is the leader, the rest follow in index
/// order. food is the best position observed so far.
struct SalpChain {
    Eigen::MatrixXd positions;  // dim x population
    Eigen::VectorXd fitness;
    Eigen::VectorXd food;
    double food_fitness = 0.0;

    int size() const { return static_cast<int>(positions.cols()); }
};

/// Exploration/exploitation balance 2*exp(-(4t/n_iter)^2); 2 at t = 0,
/// monotone decreasing.
double r1_coefficient(int t, int n_iter);

/// Leader position around the food source with all randomness passed in:
/// per dimension j, food_j +- r1*((ub - lb)*r2_j + lb), sign from
/// r3_j >= 0.5, clamped to [lb, ub].
Eigen::VectorXd salp_leader_position(const Eigen::VectorXd& food, double r1,
                                     const Eigen::VectorXd& r2, const Eigen::VectorXd& r3,
                                     double lb, double ub);

/// Follower rule: per-dimension midpoint of the salp and its predecessor,
/// clamped to [lb, ub].
template <typename D1, typename D2>
Eigen::VectorXd salp_follower_position(const Eigen::MatrixBase<D1>& current,
                                       const Eigen::MatrixBase<D2>& predecessor, double lb,
                                       double ub) {
    return (0.5 * (current + predecessor)).cwiseMax(lb).cwiseMin(ub);
}

/// Leader move drawing r2, r3 per dimension (in that order, dimension by
/// dimension).
Eigen::VectorXd leader_update(const Eigen::VectorXd& food, double r1, const SsaConfig& cfg,
                              RandomSource& rng);

/// One chain iteration: leader first, then followers in index order (each
/// sees its predecessor's already-updated position); fitness recomputed and
/// food updated if improved.
void ssa_step(SalpChain& chain, int t, int n_iter, const SsaConfig& cfg, CountingFitness& fitness,
              RandomSource& rng);

/// Random-start chain, evaluated, food set to the best member.
SalpChain init_salps(const SsaConfig& cfg, CountingFitness& fitness, RandomSource& rng);

/// Chain seeded from given columns; when seed_fitness is non-null the cached
/// values are reused instead of re-evaluating.
SalpChain init_salps_seeded(const Eigen::MatrixXd& positions, const Eigen::VectorXd* seed_fitness,
                            CountingFitness& fitness);

/// Core loop over an already-initialized chain. n_evaluations reports only
/// the calls made here, even on a counter shared with an outer search.
OptResult ssa_optimize(const SsaConfig& cfg, SalpChain chain, CountingFitness& fitness,
                       RandomSource& rng);

/// Full Salp Swarm run: random init, cfg.iterations steps, best-so-far trace
/// of length iterations + 1.
OptResult ssa_run(const SsaConfig& cfg, const FitnessFn& fitness, RandomSource& rng);

/// Same loop but starting from an injected population (used by the hybrid).
OptResult ssa_run_seeded(const SsaConfig& cfg, const Eigen::MatrixXd& init_positions,
                         const Eigen::VectorXd* init_fitness, const FitnessFn& fitness,
                         RandomSource& rng);

}  // namespace swarmselect
