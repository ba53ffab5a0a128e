#pragma once

#include <stdexcept>
#include <string>

namespace hitsim {

/// Bad experiment configuration or parameter values (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed, missing or insufficient input data (CLI exit code 3).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degenerate numerics: zero denominators, all-zero series etc. (CLI exit code 4).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hitsim
