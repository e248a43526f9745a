#include "gprisp/noise.hpp"

#include <algorithm>
#include <cmath>

#include "gprisp/errors.hpp"

namespace gprisp {

NoisyData perturb(const Signal& g, const NoiseSpec& spec) {
    if (spec.gamma < 0.0) throw invalid_input("perturb: gamma must be >= 0");
    if (spec.nodes < 1) throw invalid_input("perturb: need at least one noise node");
    if (spec.gamma == 0.0) return {g, 0.0};

    const double g_norm = g.l2_norm();
    if (g_norm == 0.0) throw invalid_input("perturb: cannot scale noise to a zero signal");

    const double span = g.grid.step * (g.grid.count - 1);
    const double tau = span / spec.nodes;

    RngState rng(spec.seed);
    Signal noise{g.grid, std::vector<double>(g.grid.count)};
    double noise_norm = 0.0;
    while (noise_norm == 0.0) {  // zero draw has probability zero, but guard it
        const auto xi = normal_samples(rng, spec.nodes + 1);
        for (int i = 0; i < g.grid.count; ++i) {
            // Hat functions form a nodal basis: n(t) linearly interpolates xi_j.
            const double u = (g.grid.node(i) - g.grid.start) / tau;
            const int j = std::clamp(static_cast<int>(std::floor(u)), 0, spec.nodes - 1);
            const double w = u - j;
            noise.values[i] = (1.0 - w) * xi[j] + w * xi[j + 1];
        }
        noise_norm = noise.l2_norm();
    }

    const double scale = spec.gamma * g_norm / noise_norm;
    NoisyData out{g, spec.gamma * g_norm};
    for (int i = 0; i < g.grid.count; ++i) out.data.values[i] += scale * noise.values[i];
    return out;
}

}  // namespace gprisp
