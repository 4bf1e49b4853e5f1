#pragma once

#include "epur/fock.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace epur {

/// A state file holds either a pure state
///   {"hbar": h, "amplitudes": [[re, im], ...]}
/// or a density
///   {"hbar": h, "matrix": [[[re, im], ...], ...]}.
struct LoadedState {
    std::optional<FockVector> pure;
    std::optional<FockDensity> density;

    double hbar() const { return pure ? pure->hbar : density->hbar; }
    FockDensity as_density() const {
        return pure ? FockDensity::from_pure(*pure) : *density;
    }
};

nlohmann::json state_to_json(const FockVector& psi);
nlohmann::json state_to_json(const FockDensity& rho);

LoadedState state_from_json(const nlohmann::json& j);
LoadedState load_state_file(const std::string& path);
void save_state_file(const std::string& path, const nlohmann::json& state);

} // namespace epur
