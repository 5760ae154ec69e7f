#pragma once

#include <Eigen/Core>

#include "swarmselect/dataset.hpp"

namespace swarmselect {

/// k-nearest-neighbor majority-vote classifier over Euclidean distance.
///
/// Deterministic tie rules: equal distances are broken by lower training row
/// index; vote ties (possible only for even k) by lower class id. By default
/// the constructor rejects even k, which precludes vote ties for binary
/// labels; pass enforce_odd_k = false to lift that.
class KnnModel {
public:
    KnnModel(TabularDataset train, int k, bool enforce_odd_k = true);

    /// Majority class among the k nearest training rows.
    int predict(Eigen::Ref<const Eigen::VectorXd> query) const;

    /// Predictions for every row of a dataset with matching feature count.
    Eigen::VectorXi predict_all(const TabularDataset& eval) const;

    /// Fraction of eval rows misclassified, in [0, 1].
    double error_rate(const TabularDataset& eval) const;

    int k() const { return k_; }
    const TabularDataset& train() const { return train_; }

private:
    TabularDataset train_;
    int k_;
};

}  // namespace swarmselect
