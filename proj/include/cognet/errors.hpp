#pragma once

#include <stdexcept>
#include <string>

namespace cognet {

// Error taxonomy mirrors the CLI exit codes: config -> 2, numeric/domain/
// infeasible -> 3, placement -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlacementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cognet
