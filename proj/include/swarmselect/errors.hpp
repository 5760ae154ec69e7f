#pragma once

#include <stdexcept>
#include <string>

namespace swarmselect {

/// Raised when a dataset file cannot be parsed; the message names the
/// offending row/column where one exists.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& msg) : std::runtime_error("load: " + msg) {}
};

/// Raised when a stratified split cannot satisfy its contract.
struct SplitError : std::runtime_error {
    explicit SplitError(const std::string& msg) : std::runtime_error("split: " + msg) {}
};

/// Raised when a feature mask selects no columns.
struct ProjectionError : std::runtime_error {
    explicit ProjectionError(const std::string& msg) : std::runtime_error("project: " + msg) {}
};

/// Raised on invalid optimizer or experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error("config: " + msg) {}
};

}  // namespace swarmselect
