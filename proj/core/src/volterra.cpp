#include "gprisp/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gprisp/errors.hpp"

namespace gprisp {

namespace {

std::vector<double> mollify(const std::vector<double>& v, double step, double width) {
    const int half = std::max(1, static_cast<int>(std::ceil(4.0 * width / step)));
    std::vector<double> w(2 * half + 1);
    for (int k = -half; k <= half; ++k)
        w[k + half] = std::exp(-0.5 * (k * step) * (k * step) / (width * width));

    const int n = static_cast<int>(v.size());
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0, norm = 0.0;
        const int lo = std::max(0, i - half), hi = std::min(n - 1, i + half);
        for (int j = lo; j <= hi; ++j) {
            acc += w[j - i + half] * v[j];
            norm += w[j - i + half];
        }
        out[i] = acc / norm;  // edge renormalization keeps constants exact
    }
    return out;
}

double lerp_sample(const Signal& s, double t) {
    const double u = (t - s.grid.start) / s.grid.step;
    const int i = std::clamp(static_cast<int>(std::floor(u)), 0, s.grid.count - 2);
    const double w = u - i;
    return (1.0 - w) * s.values[i] + w * s.values[i + 1];
}

}  // namespace

Signal differentiate_twice(const Signal& g, double smooth_width) {
    const int n = g.grid.count;
    if (n < 5) throw invalid_input("differentiate_twice: need >= 5 nodes");
    if (smooth_width < 0.0) throw invalid_input("differentiate_twice: negative width");

    const double h = g.grid.step;
    const std::vector<double> v =
        smooth_width > 0.0 ? mollify(g.values, h, smooth_width) : g.values;

    std::vector<double> d2(n);
    for (int i = 1; i + 1 < n; ++i) d2[i] = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / (h * h);
    d2[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (h * h);
    d2[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / (h * h);
    return {g.grid, std::move(d2)};
}

Signal volterra_solve(const PhysicalConfig& cfg, const Pulse& p, const Signal& g2) {
    cfg.validate();
    const double h0 = effective_source(cfg, p, 0.0);
    if (h0 == 0.0) throw singular_matrix("volterra_solve: H(0) = 0, kernel is singular");

    // March on x_m = m * c*dt/2 so 2x/c lands on the native grid of g''.
    const int n = g2.grid.count;
    const double dx = 0.5 * cfg.c * g2.grid.step;
    const double ghat_scale = 2.0 * (cfg.c + cfg.c0) / (cfg.c0 * h0);
    const double mu = 2.0 / (cfg.c * h0);

    std::vector<double> kern(n);  // H'(2 s / c) at s = j*dx, i.e. H'(j*dt)
    for (int j = 0; j < n; ++j) kern[j] = effective_source_rate(cfg, p, 2.0 * j * dx / cfg.c);

    const double denom = 1.0 + mu * dx * 0.5 * kern[0];
    if (std::abs(denom) < 1e-8)
        throw marching_breakdown("volterra_solve: marching denominator ~ 0");

    std::vector<double> f(n, 0.0);
    f[0] = ghat_scale * lerp_sample(g2, 0.0);
    for (int m = 1; m < n; ++m) {
        const double ghat = ghat_scale * lerp_sample(g2, 2.0 * m * dx / cfg.c);
        double acc = 0.5 * f[0] * kern[m];
        for (int j = 1; j < m; ++j) acc += f[j] * kern[m - j];
        f[m] = (ghat - mu * dx * acc) / denom;
    }
    return {{0.0, dx, n}, std::move(f)};
}

}  // namespace gprisp
