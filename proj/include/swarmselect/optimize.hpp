#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>
#include <vector>

#include "swarmselect/rng.hpp"

namespace swarmselect {

/// Objective handed to the optimizers; minimized.
using FitnessFn = std::function<double(const Eigen::VectorXd&)>;

/// Clamp every coordinate into [lb, ub].
template <typename Derived>
Eigen::VectorXd clamp_position(const Eigen::MatrixBase<Derived>& position, double lb, double ub) {
    return position.cwiseMax(lb).cwiseMin(ub);
}

/// Uniform random position in [lb, ub]^dim; one draw per coordinate.
inline Eigen::VectorXd random_position(Eigen::Index dim, double lb, double ub, RandomSource& rng) {
    Eigen::VectorXd p(dim);
    for (Eigen::Index i = 0; i < dim; ++i) p(i) = rng.next_uniform(lb, ub);
    return p;
}

/// One hybrid acceptance event: the inner search beat the incumbent best.
struct AcceptanceEvent {
    int iteration = 0;
    double previous_fitness = 0.0;
    double accepted_fitness = 0.0;
};

/// Outcome of one optimizer run.
struct OptResult {
    Eigen::VectorXd best_position;
    double best_fitness = 0.0;
    std::vector<double> trace;  // best-so-far fitness: initial + one entry per iteration
    long n_evaluations = 0;
    std::vector<AcceptanceEvent> acceptances;  // hhossa only; empty otherwise
};

/// Counts calls into a fitness function; shared by a whole run so hybrid
/// inner searches bill to the same budget.
class CountingFitness {
public:
    explicit CountingFitness(FitnessFn fn) : fn_(std::move(fn)) {}

    double operator()(const Eigen::VectorXd& x) {
        ++count_;
        return fn_(x);
    }

    long count() const { return count_; }

private:
    FitnessFn fn_;
    long count_ = 0;
};

}  // namespace swarmselect
