#include "swarmselect/ssa.hpp"

#include <cmath>
#include <stdexcept>

#include "swarmselect/errors.hpp"

namespace swarmselect {

void SsaConfig::validate() const {
    if (population < 1) throw ConfigError("ssa.population must be >= 1");
    if (iterations < 0) throw ConfigError("ssa.iterations must be >= 0");
    if (dim < 1) throw ConfigError("dimension must be >= 1");
    if (!(lb < ub) || !std::isfinite(lb) || !std::isfinite(ub))
        throw ConfigError("bounds must satisfy lb < ub");
}

double r1_coefficient(int t, int n_iter) {
    if (n_iter < 1) throw std::invalid_argument("r1_coefficient: n_iter must be >= 1");
    if (t < 0 || t > n_iter) throw std::invalid_argument("r1_coefficient: t must be in [0, n_iter]");
    const double x = 4.0 * static_cast<double>(t) / static_cast<double>(n_iter);
    return 2.0 * std::exp(-x * x);
}

Eigen::VectorXd salp_leader_position(const Eigen::VectorXd& food, double r1,
                                     const Eigen::VectorXd& r2, const Eigen::VectorXd& r3,
                                     double lb, double ub) {
    if (food.size() != r2.size() || food.size() != r3.size())
        throw std::invalid_argument("salp_leader_position: vector lengths differ");
    Eigen::VectorXd next(food.size());
    for (Eigen::Index j = 0; j < food.size(); ++j) {
        const double term = r1 * ((ub - lb) * r2(j) + lb);
        next(j) = r3(j) >= 0.5 ? food(j) + term : food(j) - term;
    }
    return clamp_position(next, lb, ub);
}

Eigen::VectorXd leader_update(const Eigen::VectorXd& food, double r1, const SsaConfig& cfg,
                              RandomSource& rng) {
    if (!(r1 > 0.0)) throw std::invalid_argument("leader_update: r1 must be positive");
    // per dimension: r2 first, then r3
    Eigen::VectorXd r2(food.size());
    Eigen::VectorXd r3(food.size());
    for (Eigen::Index j = 0; j < food.size(); ++j) {
        r2(j) = rng.next_unit();
        r3(j) = rng.next_unit();
    }
    return salp_leader_position(food, r1, r2, r3, cfg.lb, cfg.ub);
}

void ssa_step(SalpChain& chain, int t, int n_iter, const SsaConfig& cfg, CountingFitness& fitness,
              RandomSource& rng) {
    const double r1 = r1_coefficient(t, n_iter);
    chain.positions.col(0) = leader_update(chain.food, r1, cfg, rng);
    for (int i = 1; i < chain.size(); ++i)
        chain.positions.col(i) = salp_follower_position(chain.positions.col(i),
                                                        chain.positions.col(i - 1), cfg.lb,
                                                        cfg.ub);
    for (int i = 0; i < chain.size(); ++i) chain.fitness(i) = fitness(chain.positions.col(i));
    Eigen::Index best = 0;
    const double best_fitness = chain.fitness.minCoeff(&best);
    if (best_fitness < chain.food_fitness) {
        chain.food_fitness = best_fitness;
        chain.food = chain.positions.col(best);
    }
}

SalpChain init_salps(const SsaConfig& cfg, CountingFitness& fitness, RandomSource& rng) {
    SalpChain chain;
    chain.positions.resize(cfg.dim, cfg.population);
    chain.fitness.resize(cfg.population);
    for (int i = 0; i < cfg.population; ++i) {
        chain.positions.col(i) = random_position(cfg.dim, cfg.lb, cfg.ub, rng);
        chain.fitness(i) = fitness(chain.positions.col(i));
    }
    Eigen::Index best = 0;
    chain.food_fitness = chain.fitness.minCoeff(&best);
    chain.food = chain.positions.col(best);
    return chain;
}

SalpChain init_salps_seeded(const Eigen::MatrixXd& positions, const Eigen::VectorXd* seed_fitness,
                            CountingFitness& fitness) {
    if (positions.cols() < 1) throw std::invalid_argument("ssa: empty seed population");
    SalpChain chain;
    chain.positions = positions;
    if (seed_fitness != nullptr) {
        if (seed_fitness->size() != positions.cols())
            throw std::invalid_argument("ssa: seed fitness length mismatch");
        chain.fitness = *seed_fitness;
    } else {
        chain.fitness.resize(positions.cols());
        for (Eigen::Index i = 0; i < positions.cols(); ++i)
            chain.fitness(i) = fitness(chain.positions.col(i));
    }
    Eigen::Index best = 0;
    chain.food_fitness = chain.fitness.minCoeff(&best);
    chain.food = chain.positions.col(best);
    return chain;
}

OptResult ssa_optimize(const SsaConfig& cfg, SalpChain chain, CountingFitness& fitness,
                       RandomSource& rng) {
    const long start_count = fitness.count();
    OptResult result;
    result.trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
    result.trace.push_back(chain.food_fitness);
    for (int t = 0; t < cfg.iterations; ++t) {
        ssa_step(chain, t, cfg.iterations, cfg, fitness, rng);
        result.trace.push_back(chain.food_fitness);
    }
    result.best_position = chain.food;
    result.best_fitness = chain.food_fitness;
    result.n_evaluations = fitness.count() - start_count;
    return result;
}

OptResult ssa_run(const SsaConfig& cfg, const FitnessFn& fitness, RandomSource& rng) {
    cfg.validate();
    CountingFitness counting(fitness);
    OptResult result = ssa_optimize(cfg, init_salps(cfg, counting, rng), counting, rng);
    result.n_evaluations = counting.count();  // include initialization
    return result;
}

OptResult ssa_run_seeded(const SsaConfig& cfg, const Eigen::MatrixXd& init_positions,
                         const Eigen::VectorXd* init_fitness, const FitnessFn& fitness,
                         RandomSource& rng) {
    cfg.validate();
    if (init_positions.rows() != cfg.dim) throw ConfigError("seed population dimension mismatch");
    if (init_positions.cols() != cfg.population)
        throw ConfigError("seed population size mismatch");
    CountingFitness counting(fitness);
    OptResult result =
        ssa_optimize(cfg, init_salps_seeded(init_positions, init_fitness, counting), counting, rng);
    result.n_evaluations = counting.count();
    return result;
}

}  // namespace swarmselect
