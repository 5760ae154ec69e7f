#include "swarmselect/synthetic.hpp"

#include <string>

#include "swarmselect/errors.hpp"

namespace swarmselect {

void SyntheticSpec::validate() const {
    if (n_samples < 4) throw ConfigError("synthetic: need at least 4 samples (2 per class)");
    if (n_features < 1) throw ConfigError("synthetic: need at least 1 feature");
    if (n_informative < 0 || n_informative > n_features)
        throw ConfigError("synthetic: informative count must be in [0, n_features]");
    if (!(separation >= 0.0)) throw ConfigError("synthetic: separation must be >= 0");
    if (!(noise_sigma >= 0.0)) throw ConfigError("synthetic: noise_sigma must be >= 0");
}

TabularDataset make_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    RandomSource rng(spec.seed);

    TabularDataset ds;
    ds.features.resize(spec.n_samples, spec.n_features);
    ds.labels.resize(spec.n_samples);
    const Eigen::Index class0 = (spec.n_samples + 1) / 2;
    for (Eigen::Index r = 0; r < spec.n_samples; ++r) {
        const int label = r < class0 ? 0 : 1;
        ds.labels(r) = label;
        const double mean = label == 0 ? 0.5 - spec.separation / 2.0 : 0.5 + spec.separation / 2.0;
        for (Eigen::Index c = 0; c < spec.n_features; ++c) {
            ds.features(r, c) = c < spec.n_informative
                                    ? mean + spec.noise_sigma * rng.next_normal()
                                    : rng.next_unit();
        }
    }
    ds.feature_names.reserve(static_cast<std::size_t>(spec.n_features));
    for (Eigen::Index c = 0; c < spec.n_features; ++c)
        ds.feature_names.push_back("f" + std::to_string(c + 1));
    ds.label_names = {"0", "1"};
    return ds;
}

}  // namespace swarmselect
