#pragma once

#include <Eigen/Core>

namespace swarmselect {

/// Binary inclusion vector over features; the decision variable after
/// thresholding a continuous position.
struct FeatureMask {
    Eigen::Array<bool, Eigen::Dynamic, 1> bits;

    FeatureMask() = default;
    explicit FeatureMask(Eigen::Array<bool, Eigen::Dynamic, 1> b) : bits(std::move(b)) {}

    Eigen::Index size() const { return bits.size(); }
    Eigen::Index count() const { return bits.count(); }
    bool any() const { return bits.any(); }

    bool operator==(const FeatureMask& other) const {
        return bits.size() == other.bits.size() && (bits == other.bits).all();
    }
};

}  // namespace swarmselect
