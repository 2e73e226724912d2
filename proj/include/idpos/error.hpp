#pragma once

#include <stdexcept>
#include <string>

namespace idpos {

/// Malformed input data: corpus rows, model files, tag strings.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A trained model cannot serve the request (feature subset mismatch, missing columns).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration value, e.g. an unknown configuration code or metric name.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace idpos
