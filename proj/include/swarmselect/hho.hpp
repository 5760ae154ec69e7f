#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swarmselect/errors.hpp"
#include "swarmselect/optimize.hpp"
#include "swarmselect/rng.hpp"

namespace swarmselect {

struct HhoConfig {
    int population = 30;
    int iterations = 100;
    Eigen::Index dim = 0;
    double lb = 0.0;
    double ub = 1.0;
    double beta = 1.5;  // Levy flight exponent

    void validate() const;
};

/// Hawk positions (one column per hawk) with cached fitness and the best
/// position ever observed (the rabbit).
struct HawkPopulation {
    Eigen::MatrixXd positions;  // dim x population
    Eigen::VectorXd fitness;    // per hawk
    Eigen::VectorXd rabbit;
    double rabbit_fitness = 0.0;

    int size() const { return static_cast<int>(positions.cols()); }
    Eigen::VectorXd mean_position() const { return positions.rowwise().mean(); }
};

/// Escaping-energy schedule state for one hawk update.
struct EnergyState {
    double e0 = 0.0;  // initial energy in (-1, 1)
    double e = 0.0;   // escaping energy
    double j = 0.0;   // jump strength in [0, 2]
    int t = 0;
    int t_max = 0;
};

/// Escaping energy 2*e0*(1 - t/t_max); linear decay to 0 at t = t_max.
double energy(double e0, int t, int t_max);

/// Mantegna normalization constant for the Levy step.
double levy_sigma(double beta);

/// Heavy-tailed Levy step: per coordinate 0.01 * u * sigma / |v|^(1/beta)
/// with u, v standard normal. Draws the whole u vector, then the whole v
/// vector (two normals = four uniform draws per coordinate).
Eigen::VectorXd levy_flight(Eigen::Index dim, double beta, RandomSource& rng);

// --- update-equation kernels -----------------------------------------------
// Pure position algebra with every random quantity passed in, so each branch
// can be pinned against hand-computed values.

/// Perch near a random swarm member: x_rand - r1*|x_rand - 2*r2*x|.
template <typename D1, typename D2>
Eigen::VectorXd perch_on_random(const Eigen::MatrixBase<D1>& x_rand, double r1, double r2,
                                const Eigen::MatrixBase<D2>& x) {
    return x_rand - r1 * (x_rand - 2.0 * r2 * x).cwiseAbs();
}

/// Perch on a random site in the home range:
/// (rabbit - mean) - r3*(lb + r4*(ub - lb)).
template <typename D1, typename D2>
Eigen::VectorXd perch_in_range(const Eigen::MatrixBase<D1>& rabbit,
                               const Eigen::MatrixBase<D2>& mean, double r3, double r4, double lb,
                               double ub) {
    return ((rabbit - mean).array() - r3 * (lb + r4 * (ub - lb))).matrix();
}

/// Soft besiege: (rabbit - x) - e*|j*rabbit - x|.
template <typename D1, typename D2>
Eigen::VectorXd soft_besiege(const Eigen::MatrixBase<D1>& rabbit, const Eigen::MatrixBase<D2>& x,
                             double e, double j) {
    return (rabbit - x) - e * (j * rabbit - x).cwiseAbs();
}

/// Hard besiege: rabbit - e*|rabbit - x|.
template <typename D1, typename D2>
Eigen::VectorXd hard_besiege(const Eigen::MatrixBase<D1>& rabbit, const Eigen::MatrixBase<D2>& x,
                             double e) {
    return rabbit - e * (rabbit - x).cwiseAbs();
}

/// First dive candidate while the prey still has energy:
/// rabbit - e*|j*rabbit - x|.
template <typename D1, typename D2>
Eigen::VectorXd dive_toward_rabbit(const Eigen::MatrixBase<D1>& rabbit,
                                   const Eigen::MatrixBase<D2>& x, double e, double j) {
    return rabbit - e * (j * rabbit - x).cwiseAbs();
}

/// First dive candidate once the prey is exhausted; measured against the
/// population mean instead of the hawk itself.
template <typename D1, typename D2>
Eigen::VectorXd dive_toward_rabbit_mean(const Eigen::MatrixBase<D1>& rabbit,
                                        const Eigen::MatrixBase<D2>& mean, double e, double j) {
    return rabbit - e * (j * rabbit - mean).cwiseAbs();
}

/// Levy-perturbed second dive candidate: z = y + s .* levy.
template <typename D1, typename D2, typename D3>
Eigen::VectorXd levy_dive(const Eigen::MatrixBase<D1>& y, const Eigen::MatrixBase<D2>& s,
                          const Eigen::MatrixBase<D3>& levy) {
    return y + s.cwiseProduct(levy);
}

// --- stochastic update steps ------------------------------------------------

/// Exploration move (|e| >= 1): draws q to pick a perch strategy, then the
/// strategy's own random numbers. Result clamped to [lb, ub].
Eigen::VectorXd exploration_update(const Eigen::VectorXd& x, const HawkPopulation& pop,
                                   const HhoConfig& cfg, RandomSource& rng);

/// Exploitation move (|e| < 1): dispatches on (r, |e|) to soft besiege, hard
/// besiege, or the progressive-dive pair. Dive candidates are clamped before
/// evaluation and accepted only when they improve on x_fitness; otherwise x
/// is returned unchanged. Result clamped to [lb, ub].
Eigen::VectorXd besiege_update(const Eigen::VectorXd& x, double x_fitness,
                               const HawkPopulation& pop, const EnergyState& es, double r,
                               const HhoConfig& cfg, CountingFitness& fitness, RandomSource& rng);

/// Random initial population, evaluated, with the rabbit set.
HawkPopulation init_hawks(const HhoConfig& cfg, CountingFitness& fitness, RandomSource& rng);

/// One outer iteration: per hawk draw (e0, j), dispatch on |e|, update the
/// position in place; then recompute all fitness values and the rabbit.
void hho_step(HawkPopulation& pop, int t, int t_max, const HhoConfig& cfg,
              CountingFitness& fitness, RandomSource& rng);

/// Full Harris Hawks run: random init, cfg.iterations steps, best-so-far
/// trace of length iterations + 1.
OptResult hho_run(const HhoConfig& cfg, const FitnessFn& fitness, RandomSource& rng);

}  // namespace swarmselect
