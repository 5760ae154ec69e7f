#include "swarmselect/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmselect/knn.hpp"

namespace swarmselect {

namespace {
constexpr double kEmptyMaskPenalty = 1.0;  // >= any reachable a*err + b*ratio with a=0.9, b=0.1

void check_fitness_params(double a, double b, double threshold) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("fitness: a must be in (0, 1]");
    if (!(b >= 0.0)) throw std::invalid_argument("fitness: b must be >= 0");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("binarize: threshold must be in (0, 1)");
}
}  // namespace

FeatureMask binarize(Eigen::Ref<const Eigen::VectorXd> position, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("binarize: threshold must be in (0, 1)");
    FeatureMask mask;
    mask.bits = position.array() > threshold;  // equality maps to 0
    return mask;
}

double combine_fitness(double a, double b, double class_err, Eigen::Index n_selected,
                       Eigen::Index n_features) {
    if (n_features < 1) throw std::invalid_argument("fitness: n_features must be >= 1");
    return a * class_err +
           b * (static_cast<double>(n_selected) / static_cast<double>(n_features));
}

FitnessReport evaluate(Eigen::Ref<const Eigen::VectorXd> position, const TabularDataset& train,
                       const TabularDataset& validation, int k, double a, double b,
                       double threshold) {
    check_fitness_params(a, b, threshold);
    if (train.n_features() != validation.n_features())
        throw std::invalid_argument("evaluate: train/validation feature counts differ");
    if (position.size() != train.n_features())
        throw std::invalid_argument("evaluate: position length " +
                                    std::to_string(position.size()) + " != feature count " +
                                    std::to_string(train.n_features()));

    FitnessReport report;
    report.mask = binarize(position, threshold);
    report.n_selected = report.mask.count();
    if (!report.mask.any()) {
        report.fitness = kEmptyMaskPenalty;
        report.class_err = std::numeric_limits<double>::quiet_NaN();
        report.empty_mask = true;
        return report;
    }

    const KnnModel model(project(train, report.mask), k);
    report.class_err = model.error_rate(project(validation, report.mask));
    report.fitness = combine_fitness(a, b, report.class_err, report.n_selected,
                                     train.n_features());
    return report;
}

WrapperObjective::WrapperObjective(TabularDataset train, TabularDataset validation, int k,
                                   double a, double b, double threshold)
    : train_(std::move(train)),
      validation_(std::move(validation)),
      k_(k),
      a_(a),
      b_(b),
      threshold_(threshold) {
    check_fitness_params(a_, b_, threshold_);
    if (train_.n_features() != validation_.n_features())
        throw std::invalid_argument("objective: train/validation feature counts differ");
    if (k_ < 1 || k_ > train_.n_samples())
        throw std::invalid_argument("objective: k must be in [1, train samples]");
    if (k_ % 2 == 0) throw std::invalid_argument("objective: k must be odd for binary voting");
}

double WrapperObjective::operator()(const Eigen::VectorXd& position) const {
    return report(position).fitness;
}

FitnessReport WrapperObjective::report(const Eigen::VectorXd& position) const {
    return evaluate(position, train_, validation_, k_, a_, b_, threshold_);
}

}  // namespace swarmselect
