#pragma once

#include <cstdint>
#include <string>

#include "gprisp/model.hpp"

namespace gprisp {

enum class Method { spectral, volterra };

/// One experiment definition: physics, pulse, truth source, noise, solver
/// knobs. Defaults reproduce the standard setup (c = 0.15 m/ns, T = 12 ns,
/// two-Gaussian source, omega = 8 pulse).
struct ExperimentConfig {
    PhysicalConfig physics{};
    double omega = 8.0;
    double nu = 0.2;
    int modes = 20;       // N, Fourier cut-off
    double alpha = 0.0;   // Tikhonov weight
    double gamma = 0.0;   // relative noise level
    std::uint64_t seed = 0x5EED;
    int seed_count = 11;  // ensemble size for noisy runs
    SourceSpec source = SourceSpec::two_gaussian();
    Method method = Method::spectral;
    int oversample = 2;   // forward-data refinement vs the inversion grid
};

/// Parse a JSON config document. Every field is optional and defaulted;
/// unknown fields are rejected with a message naming the field, as are
/// type or range violations. Throws invalid_input.
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace gprisp
