#include "gprisp/forward.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gprisp/errors.hpp"

namespace gprisp {

namespace {

// Tabulates F at xi_m = m * c*dt/2 and the time kernel at s_j = j * dt, then
// evaluates I_i = int_0^{c t_i/2} F(xi) K(t_i - 2 xi/c) dxi by the trapezoid
// rule. With the locked step, K(t_i - 2 xi_m / c) = K((i-m) dt): a discrete
// convolution whose upper limit always lands on a node.
template <typename KernelFn>
std::vector<double> convolve_front(const PhysicalConfig& cfg, const SourceSpec& s,
                                   int steps, double dt, KernelFn kernel) {
    const double dxi = 0.5 * cfg.c * dt;
    const double l = cfg.depth();
    std::vector<double> f(steps + 1), k(steps + 1);
    for (int m = 0; m <= steps; ++m)
        f[m] = source_eval(s, cfg, std::min(m * dxi, l));  // endpoint rounding guard
    for (int j = 0; j <= steps; ++j) k[j] = kernel(j * dt);

    std::vector<double> out(steps + 1, 0.0);
    for (int i = 1; i <= steps; ++i) {
        double acc = 0.5 * (f[0] * k[i] + f[i] * k[0]);
        for (int m = 1; m < i; ++m) acc += f[m] * k[i - m];
        out[i] = acc * dxi;
    }
    return out;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& v, double step) {
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t i = 1; i < v.size(); ++i)
        out[i] = out[i - 1] + 0.5 * step * (v[i - 1] + v[i]);
    return out;
}

double trace_prefactor(const PhysicalConfig& cfg) {
    return cfg.c0 / (cfg.c * (cfg.c + cfg.c0));
}

}  // namespace

Signal boundary_trace(const PhysicalConfig& cfg, const Pulse& p, const SourceSpec& s,
                      int oversample) {
    cfg.validate();
    if (oversample < 1) throw invalid_input("boundary_trace: oversample must be >= 1");

    const int fine_steps = cfg.M * oversample;
    const double fine_dt = cfg.T / fine_steps;
    auto inner = convolve_front(cfg, s, fine_steps, fine_dt,
                                [&](double t) { return effective_source(cfg, p, t); });
    const double pref = trace_prefactor(cfg);
    for (auto& v : inner) v *= pref;

    const auto fine_g = cumulative_trapezoid(inner, fine_dt);
    Signal g{cfg.time_grid(), std::vector<double>(cfg.M + 1)};
    for (int i = 0; i <= cfg.M; ++i) g.values[i] = fine_g[i * oversample];
    return g;
}

Signal derivative_trace(const PhysicalConfig& cfg, const Pulse& p, const SourceSpec& s) {
    cfg.validate();
    auto vals = convolve_front(cfg, s, cfg.M, cfg.dt(),
                               [&](double t) { return effective_source(cfg, p, t); });
    const double pref = trace_prefactor(cfg);
    for (auto& v : vals) v *= pref;
    return {cfg.time_grid(), std::move(vals)};
}

Signal second_derivative_trace(const PhysicalConfig& cfg, const Pulse& p,
                               const SourceSpec& s) {
    cfg.validate();
    auto vals = convolve_front(cfg, s, cfg.M, cfg.dt(), [&](double t) {
        return effective_source_rate(cfg, p, t);
    });

    const double pref = trace_prefactor(cfg);
    const double h0 = effective_source(cfg, p, 0.0);
    const double dxi = 0.5 * cfg.c * cfg.dt();
    const double l = cfg.depth();
    for (int i = 0; i <= cfg.M; ++i) {
        const double front = source_eval(s, cfg, std::min(i * dxi, l)) * h0 * 0.5 * cfg.c;
        vals[i] = pref * (front + vals[i]);
    }
    return {cfg.time_grid(), std::move(vals)};
}

}  // namespace gprisp
