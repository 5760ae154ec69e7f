#include "swarmselect/metrics.hpp"

#include <stdexcept>
#include <string>

namespace swarmselect {

namespace {
double ratio(long num, long den) { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
}  // namespace

ConfusionCounts confusion(Eigen::Ref<const Eigen::VectorXi> predicted,
                          Eigen::Ref<const Eigen::VectorXi> actual, int positive_class) {
    if (predicted.size() != actual.size())
        throw std::invalid_argument("confusion: predicted length " +
                                    std::to_string(predicted.size()) + " != actual length " +
                                    std::to_string(actual.size()));
    if (predicted.size() < 1) throw std::invalid_argument("confusion: empty input");

    ConfusionCounts c;
    for (Eigen::Index i = 0; i < predicted.size(); ++i) {
        const bool pred_pos = predicted(i) == positive_class;
        const bool is_pos = actual(i) == positive_class;
        if (pred_pos && is_pos) ++c.tp;
        else if (pred_pos && !is_pos) ++c.fp;
        else if (!pred_pos && is_pos) ++c.fn;
        else ++c.tn;
    }
    return c;
}

double accuracy(const ConfusionCounts& c) { return ratio(c.tp + c.tn, c.total()); }

double precision(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fp); }

double recall(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fn); }

double specificity(const ConfusionCounts& c) { return ratio(c.tn, c.tn + c.fp); }

double f1(const ConfusionCounts& c) {
    const double p = precision(c);
    const double r = recall(c);
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

MetricsReport metrics_report(const ConfusionCounts& c) {
    MetricsReport m;
    m.accuracy = accuracy(c);
    m.precision = precision(c);
    m.recall = recall(c);
    m.specificity = specificity(c);
    m.f1 = f1(c);
    m.degenerate = (c.tp + c.fp == 0) || (c.tp + c.fn == 0) || (c.tn + c.fp == 0) ||
                   (m.precision + m.recall == 0.0);
    return m;
}

}  // namespace swarmselect
