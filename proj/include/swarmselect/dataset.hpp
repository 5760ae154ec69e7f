#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swarmselect/feature_mask.hpp"
#include "swarmselect/rng.hpp"

namespace swarmselect {

/// Labeled feature matrix: rows are samples, columns are features. Labels
/// are binary {0, 1}. Immutable by convention after construction.
struct TabularDataset {
    Eigen::MatrixXd features;                // n_samples x n_features
    Eigen::VectorXi labels;                  // values in {0, 1}
    std::vector<std::string> feature_names;  // optional, empty when synthetic
    std::vector<std::string> label_names;    // label_names[class_id] = original value

    Eigen::Index n_samples() const { return features.rows(); }
    Eigen::Index n_features() const { return features.cols(); }
};

/// Row-disjoint train/test partition with per-class proportions preserved.
struct SplitPair {
    TabularDataset train;
    TabularDataset test;
    std::uint64_t split_seed = 0;
};

/// Per-feature (min, max) fitted on one dataset, applicable to another.
/// apply() maps each column to [0, 1] and clamps values outside the fitted
/// range; columns that were constant at fit time map to 0.
struct MinMaxScaler {
    Eigen::VectorXd col_min;
    Eigen::VectorXd col_max;

    TabularDataset apply(const TabularDataset& ds) const;
};

/// Parse a comma-separated file with a header row. All non-label columns
/// must be numeric; the label column must hold exactly two distinct values,
/// mapped to {0, 1} by sorted order (the mapping is kept in label_names).
/// `label_column` is a header name, or a 0-based column index if no header
/// matches and the string parses as an integer.
TabularDataset load_csv(const std::string& path, const std::string& label_column);

/// Write a dataset as CSV (header + full round-trip precision values).
void write_csv(const TabularDataset& ds, const std::string& path,
               const std::string& label_column = "label");

/// Scale every feature column to [0, 1]; returns the scaled dataset and the
/// fitted scaler for applying the identical transform elsewhere.
std::pair<TabularDataset, MinMaxScaler> minmax_scale(const TabularDataset& ds);

/// Stratified row split: per-class shuffle, then the first
/// round(train_fraction * n_class) rows (clamped so both sides keep at least
/// one sample per class) go to train. Row order within each side follows the
/// original dataset. Deterministic given the rng state.
SplitPair stratified_split(const TabularDataset& ds, double train_fraction, RandomSource& rng);

/// Keep only the columns where mask is set, preserving row order.
TabularDataset project(const TabularDataset& ds, const FeatureMask& mask);

}  // namespace swarmselect
