#pragma once

#include <cstdint>

#include "swarmselect/dataset.hpp"
#include "swarmselect/rng.hpp"

namespace swarmselect {

/// Controlled benchmark substrate: the first n_informative feature columns
/// carry class signal, the rest are uniform noise.
struct SyntheticSpec {
    Eigen::Index n_samples = 200;
    Eigen::Index n_features = 20;
    Eigen::Index n_informative = 5;
    double separation = 0.4;   // gap between per-class means of informative columns
    double noise_sigma = 0.25; // spread of informative columns around their class mean
    std::uint64_t seed = 0;

    void validate() const;
};

/// Balanced binary dataset: rows [0, n/2) are class 0, the rest class 1.
/// Informative column j for class c draws N(0.5 -+ separation/2, sigma);
/// noise columns draw U(0, 1). Values are generated row by row, column by
/// column, so the layout is deterministic in the seed.
TabularDataset make_synthetic(const SyntheticSpec& spec);

}  // namespace swarmselect
