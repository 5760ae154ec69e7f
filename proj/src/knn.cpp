#include "swarmselect/knn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swarmselect {

KnnModel::KnnModel(TabularDataset train, int k, bool enforce_odd_k)
    : train_(std::move(train)), k_(k) {
    if (k_ < 1) throw std::invalid_argument("knn: k must be >= 1");
    if (k_ > train_.n_samples())
        throw std::invalid_argument("knn: k = " + std::to_string(k_) + " exceeds " +
                                    std::to_string(train_.n_samples()) + " training samples");
    if (enforce_odd_k && k_ % 2 == 0)
        throw std::invalid_argument("knn: k must be odd for binary voting");
}

int KnnModel::predict(Eigen::Ref<const Eigen::VectorXd> query) const {
    if (query.size() != train_.n_features())
        throw std::invalid_argument("knn: query length " + std::to_string(query.size()) +
                                    " != feature count " + std::to_string(train_.n_features()));

    const Eigen::VectorXd d2 =
        (train_.features.rowwise() - query.transpose()).rowwise().squaredNorm();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(train_.n_samples()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    // distance ties break toward the lower training row index
    std::partial_sort(order.begin(), order.begin() + k_, order.end(),
                      [&d2](Eigen::Index a, Eigen::Index b) {
                          return d2(a) != d2(b) ? d2(a) < d2(b) : a < b;
                      });

    int votes_one = 0;
    for (int i = 0; i < k_; ++i) votes_one += train_.labels(order[static_cast<std::size_t>(i)]);
    // a vote tie (even k only) goes to the lower class id
    return 2 * votes_one > k_ ? 1 : 0;
}

Eigen::VectorXi KnnModel::predict_all(const TabularDataset& eval) const {
    Eigen::VectorXi out(eval.n_samples());
    for (Eigen::Index r = 0; r < eval.n_samples(); ++r) out(r) = predict(eval.features.row(r));
    return out;
}

double KnnModel::error_rate(const TabularDataset& eval) const {
    if (eval.n_samples() < 1) throw std::invalid_argument("knn: empty evaluation set");
    const Eigen::VectorXi pred = predict_all(eval);
    long wrong = 0;
    for (Eigen::Index r = 0; r < eval.n_samples(); ++r) wrong += pred(r) != eval.labels(r);
    return static_cast<double>(wrong) / static_cast<double>(eval.n_samples());
}

}  // namespace swarmselect
