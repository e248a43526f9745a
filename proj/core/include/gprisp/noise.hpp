#pragma once

#include <cstdint>

#include "gprisp/model.hpp"

namespace gprisp {

/// Random perturbation model for measured data.
struct NoiseSpec {
    double gamma = 0.0;        // relative noise level
    std::uint64_t seed = 0;
    int nodes = 1;             // N_n: noise nodes span [0,T] with tau = T/N_n
};

struct NoisyData {
    Signal data;     // g + delta g
    double gamma1;   // absolute level ||delta g||_L2 = gamma * ||g||_L2
};

/// g^gamma = g + gamma * n * ||g|| / ||n|| where n(t) is the piecewise-linear
/// interpolant through iid N(0,1) nodal values at t = j*tau. The relative
/// level ||delta g||/||g|| equals gamma exactly by construction.
NoisyData perturb(const Signal& g, const NoiseSpec& spec);

}  // namespace gprisp
