#pragma once

#include <stdexcept>
#include <string>

namespace epur {

/// State (or requested operation) needs a larger Fock cutoff.
struct truncation_error : std::runtime_error {
    int required_nmax;
    truncation_error(const std::string& what, int required)
        : std::runtime_error(what), required_nmax(required) {}
};

/// Grid does not cover the state well enough (normalization leaked,
/// or the extent misses the classical turning point).
struct grid_error : std::runtime_error {
    double recommended_extent;
    grid_error(const std::string& what, double extent)
        : std::runtime_error(what), recommended_extent(extent) {}
};

/// Wigner function dips below the negativity gate, so joint-entropy
/// quantities are undefined for this state.
struct wigner_negative_error : std::runtime_error {
    double min_value;
    wigner_negative_error(const std::string& what, double minv)
        : std::runtime_error(what), min_value(minv) {}
};

} // namespace epur
