#pragma once

#include <Eigen/Core>

#include "swarmselect/dataset.hpp"
#include "swarmselect/feature_mask.hpp"

namespace swarmselect {

/// Threshold a continuous position into a feature mask: bit i is set iff
/// coords[i] > threshold (equality maps to 0). Threshold must lie in (0, 1).
FeatureMask binarize(Eigen::Ref<const Eigen::VectorXd> position, double threshold = 0.5);

/// Wrapper fitness: a * class_err + b * (n_selected / n_features). Lower is
/// better.
double combine_fitness(double a, double b, double class_err, Eigen::Index n_selected,
                       Eigen::Index n_features);

/// Fitness value with its components. For an empty mask the penalty fitness
/// 1.0 is reported, class_err is NaN, and empty_mask is set.
struct FitnessReport {
    double fitness = 0.0;
    double class_err = 0.0;
    Eigen::Index n_selected = 0;
    FeatureMask mask;
    bool empty_mask = false;
};

/// Score one position: binarize, project train/validation onto the mask,
/// fit KNN on the projected train rows, take the validation error rate, and
/// combine. Pure: identical inputs give identical outputs. An empty mask
/// short-circuits to the penalty without touching KNN.
FitnessReport evaluate(Eigen::Ref<const Eigen::VectorXd> position, const TabularDataset& train,
                       const TabularDataset& validation, int k, double a, double b,
                       double threshold = 0.5);

/// Binds datasets and fitness parameters into a reusable position scorer,
/// the fitness function handed to the optimizers.
class WrapperObjective {
public:
    WrapperObjective(TabularDataset train, TabularDataset validation, int k, double a, double b,
                     double threshold = 0.5);

    double operator()(const Eigen::VectorXd& position) const;
    FitnessReport report(const Eigen::VectorXd& position) const;

    Eigen::Index dim() const { return train_.n_features(); }

private:
    TabularDataset train_;
    TabularDataset validation_;
    int k_;
    double a_;
    double b_;
    double threshold_;
};

}  // namespace swarmselect
