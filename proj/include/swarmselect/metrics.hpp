#pragma once

#include <Eigen/Core>

namespace swarmselect {

/// Standard 2x2 confusion table for a declared positive class.
struct ConfusionCounts {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;

    long total() const { return tp + tn + fp + fn; }
};

/// Tally predictions against ground truth. Throws std::invalid_argument on
/// length mismatch or empty input.
ConfusionCounts confusion(Eigen::Ref<const Eigen::VectorXi> predicted,
                          Eigen::Ref<const Eigen::VectorXi> actual, int positive_class);

// Each metric returns a value in [0, 1]; a zero denominator yields 0 (see
// metrics_report for the degenerate flag).
double accuracy(const ConfusionCounts& c);     // (TP+TN) / (TP+TN+FP+FN)
double precision(const ConfusionCounts& c);    // TP / (TP+FP)
double recall(const ConfusionCounts& c);       // TP / (TP+FN)
double specificity(const ConfusionCounts& c);  // TN / (TN+FP)
double f1(const ConfusionCounts& c);           // harmonic mean of precision and recall

/// All five metrics plus a flag for any zero-denominator case encountered.
struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double specificity = 0.0;
    double f1 = 0.0;
    bool degenerate = false;
};

MetricsReport metrics_report(const ConfusionCounts& c);

}  // namespace swarmselect
