#include "swarmselect/hho.hpp"

namespace swarmselect {

void HhoConfig::validate() const {
    if (population < 1) throw ConfigError("hho.population must be >= 1");
    if (iterations < 0) throw ConfigError("hho.iterations must be >= 0");
    if (dim < 1) throw ConfigError("dimension must be >= 1");
    if (!(lb < ub) || !std::isfinite(lb) || !std::isfinite(ub))
        throw ConfigError("bounds must satisfy lb < ub");
    if (!(beta > 0.0 && beta <= 2.0)) throw ConfigError("hho.beta must be in (0, 2]");
}

double energy(double e0, int t, int t_max) {
    if (t_max < 1) throw std::invalid_argument("energy: t_max must be >= 1");
    if (t < 0 || t > t_max) throw std::invalid_argument("energy: t must be in [0, t_max]");
    return 2.0 * e0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

double levy_sigma(double beta) {
    if (!(beta > 0.0 && beta <= 2.0)) throw std::invalid_argument("levy: beta must be in (0, 2]");
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den =
        std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

Eigen::VectorXd levy_flight(Eigen::Index dim, double beta, RandomSource& rng) {
    if (dim < 1) throw std::invalid_argument("levy: dim must be >= 1");
    const double sigma = levy_sigma(beta);
    Eigen::VectorXd u(dim);
    for (Eigen::Index i = 0; i < dim; ++i) u(i) = rng.next_normal();
    Eigen::VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.next_normal();

    Eigen::VectorXd step(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        step(i) = 0.01 * u(i) * sigma / std::pow(std::abs(v(i)), 1.0 / beta);
        if (!std::isfinite(step(i))) step(i) = 0.0;  // measure-zero v == 0 draw
    }
    return step;
}

Eigen::VectorXd exploration_update(const Eigen::VectorXd& x, const HawkPopulation& pop,
                                   const HhoConfig& cfg, RandomSource& rng) {
    // draw order: q, then (index, r1, r2) or (r3, r4)
    const double q = rng.next_unit();
    Eigen::VectorXd next;
    if (q >= 0.5) {
        const auto idx = static_cast<Eigen::Index>(rng.next_index(static_cast<std::size_t>(pop.size())));
        const double r1 = rng.next_unit();
        const double r2 = rng.next_unit();
        next = perch_on_random(pop.positions.col(idx), r1, r2, x);
    } else {
        const double r3 = rng.next_unit();
        const double r4 = rng.next_unit();
        next = perch_in_range(pop.rabbit, pop.mean_position(), r3, r4, cfg.lb, cfg.ub);
    }
    return clamp_position(next, cfg.lb, cfg.ub);
}

Eigen::VectorXd besiege_update(const Eigen::VectorXd& x, double x_fitness,
                               const HawkPopulation& pop, const EnergyState& es, double r,
                               const HhoConfig& cfg, CountingFitness& fitness, RandomSource& rng) {
    const double abs_e = std::abs(es.e);
    if (r >= 0.5) {
        Eigen::VectorXd next = abs_e >= 0.5 ? soft_besiege(pop.rabbit, x, es.e, es.j)
                                            : hard_besiege(pop.rabbit, x, es.e);
        return clamp_position(next, cfg.lb, cfg.ub);
    }

    // progressive rapid dives: probe y, then the Levy-perturbed z, keep the
    // first that improves on the hawk's own fitness
    const Eigen::VectorXd y = clamp_position(
        abs_e >= 0.5 ? dive_toward_rabbit(pop.rabbit, x, es.e, es.j)
                     : dive_toward_rabbit_mean(pop.rabbit, pop.mean_position(), es.e, es.j),
        cfg.lb, cfg.ub);
    if (fitness(y) < x_fitness) return y;

    Eigen::VectorXd s(x.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = rng.next_unit();
    const Eigen::VectorXd z =
        clamp_position(levy_dive(y, s, levy_flight(x.size(), cfg.beta, rng)), cfg.lb, cfg.ub);
    if (fitness(z) < x_fitness) return z;
    return x;
}

HawkPopulation init_hawks(const HhoConfig& cfg, CountingFitness& fitness, RandomSource& rng) {
    HawkPopulation pop;
    pop.positions.resize(cfg.dim, cfg.population);
    pop.fitness.resize(cfg.population);
    for (int i = 0; i < cfg.population; ++i) {
        pop.positions.col(i) = random_position(cfg.dim, cfg.lb, cfg.ub, rng);
        pop.fitness(i) = fitness(pop.positions.col(i));
    }
    Eigen::Index best = 0;
    pop.rabbit_fitness = pop.fitness.minCoeff(&best);
    pop.rabbit = pop.positions.col(best);
    return pop;
}

void hho_step(HawkPopulation& pop, int t, int t_max, const HhoConfig& cfg,
              CountingFitness& fitness, RandomSource& rng) {
    for (int i = 0; i < pop.size(); ++i) {
        const double e0 = rng.next_uniform(-1.0, 1.0);
        const double j = 2.0 * (1.0 - rng.next_unit());
        const EnergyState es{e0, energy(e0, t, t_max), j, t, t_max};
        Eigen::VectorXd next;
        if (std::abs(es.e) >= 1.0) {
            next = exploration_update(pop.positions.col(i), pop, cfg, rng);
        } else {
            const double r = rng.next_unit();
            next = besiege_update(pop.positions.col(i), pop.fitness(i), pop, es, r, cfg, fitness,
                                  rng);
        }
        pop.positions.col(i) = next;  // in place: later hawks see the move
    }
    for (int i = 0; i < pop.size(); ++i) pop.fitness(i) = fitness(pop.positions.col(i));
    Eigen::Index best = 0;
    const double best_fitness = pop.fitness.minCoeff(&best);
    if (best_fitness < pop.rabbit_fitness) {
        pop.rabbit_fitness = best_fitness;
        pop.rabbit = pop.positions.col(best);
    }
}

OptResult hho_run(const HhoConfig& cfg, const FitnessFn& fitness, RandomSource& rng) {
    cfg.validate();
    CountingFitness counting(fitness);
    HawkPopulation pop = init_hawks(cfg, counting, rng);

    OptResult result;
    result.trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
    result.trace.push_back(pop.rabbit_fitness);
    for (int t = 0; t < cfg.iterations; ++t) {
        hho_step(pop, t, cfg.iterations, cfg, counting, rng);
        result.trace.push_back(pop.rabbit_fitness);
    }
    result.best_position = pop.rabbit;
    result.best_fitness = pop.rabbit_fitness;
    result.n_evaluations = counting.count();
    return result;
}

}  // namespace swarmselect
