#include "gprisp/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "gprisp/errors.hpp"

namespace gprisp {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr int kProjectionNodes = 2001;
}  // namespace

double Basis::eigenvalue(int k) const { return k * kPi / l; }

Basis make_basis(double l, int modes) {
    if (!(l > 0.0)) throw invalid_input("make_basis: l must be > 0");
    if (modes < 1) throw invalid_input("make_basis: modes must be >= 1");
    return {l, modes};
}

double basis_eval(const Basis& b, int k, double x) {
    if (k < 1 || k > b.modes) throw invalid_input("basis_eval: mode index out of range");
    if (x < 0.0 || x > b.l) throw invalid_input("basis_eval: x outside [0, l]");
    return std::sqrt(2.0 / b.l) * std::sin(b.eigenvalue(k) * x);
}

CoefVector project(const Basis& b, const SourceSpec& s, const PhysicalConfig& cfg) {
    const double h = b.l / (kProjectionNodes - 1);
    std::vector<double> f(kProjectionNodes);
    for (int i = 0; i < kProjectionNodes; ++i) f[i] = source_eval(s, cfg, i * h);

    CoefVector coeffs(b.modes, 0.0);
    for (int k = 1; k <= b.modes; ++k) {
        const double lam = b.eigenvalue(k);
        const double scale = std::sqrt(2.0 / b.l);
        double acc = 0.0;  // integrand vanishes at both ends (sin(0) = sin(k pi) = 0)
        for (int i = 1; i + 1 < kProjectionNodes; ++i)
            acc += f[i] * scale * std::sin(lam * i * h);
        coeffs[k - 1] = acc * h;
    }
    return coeffs;
}

double synthesize(const Basis& b, const CoefVector& c, double x) {
    if (static_cast<int>(c.size()) != b.modes)
        throw invalid_input("synthesize: coefficient count != basis modes");
    const double scale = std::sqrt(2.0 / b.l);
    double v = 0.0;
    for (int k = 1; k <= b.modes; ++k)
        v += c[k - 1] * scale * std::sin(b.eigenvalue(k) * x);
    return v;
}

double kernel_prefactor(const PhysicalConfig& cfg) {
    return cfg.kappa * cfg.c0 / (cfg.c * (cfg.c + cfg.c0));
}

std::vector<Signal> kernel_functions(const PhysicalConfig& cfg, const Pulse& p,
                                     const Basis& b) {
    cfg.validate();
    const double dt = cfg.dt();
    const double dxi = 0.5 * cfg.c * dt;
    const double pref = kernel_prefactor(cfg);
    const double dphi0 = p.eval(0.0, 1);

    // Time factor Phi'(s) - Phi'(0) tabulated once; with the xi-step locked to
    // c*dt/2 the argument t_i - 2 xi_m / c is always a grid time (i-m)*dt.
    std::vector<double> psi(cfg.M + 1);
    for (int j = 0; j <= cfg.M; ++j) psi[j] = p.eval(j * dt, 1) - dphi0;

    std::vector<Signal> kernels;
    kernels.reserve(b.modes);
    for (int k = 1; k <= b.modes; ++k) {
        std::vector<double> xk(cfg.M + 1);
        for (int m = 0; m <= cfg.M; ++m)
            xk[m] = basis_eval(b, k, std::min(m * dxi, b.l));  // endpoint rounding guard

        std::vector<double> vals(cfg.M + 1, 0.0);
        for (int i = 1; i <= cfg.M; ++i) {
            double acc = 0.5 * (xk[0] * psi[i] + xk[i] * psi[0]);
            for (int m = 1; m < i; ++m) acc += xk[m] * psi[i - m];
            vals[i] = pref * acc * dxi;
        }
        kernels.push_back({cfg.time_grid(), std::move(vals)});
    }
    return kernels;
}

GramSystem assemble(std::vector<Signal> kernels, Signal g, double alpha,
                    double prefactor) {
    if (kernels.empty()) throw invalid_input("assemble: no kernels");
    if (alpha < 0.0) throw invalid_input("assemble: alpha must be >= 0");
    for (const auto& k : kernels)
        if (!(k.grid == g.grid)) throw invalid_input("assemble: kernel/data grid mismatch");

    const int n = static_cast<int>(kernels.size());
    const int nodes = g.grid.count;
    const double dt = g.grid.step;

    auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double acc = 0.5 * (u[0] * v[0] + u[nodes - 1] * v[nodes - 1]);
        for (int i = 1; i + 1 < nodes; ++i) acc += u[i] * v[i];
        return acc * dt;
    };

    SymMatrix a(n);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) a.at(i, j) = inner(kernels[i].values, kernels[j].values);
        rhs[i] = inner(kernels[i].values, g.values);
    }
    return {std::move(kernels), std::move(g), std::move(a), std::move(rhs), alpha, prefactor};
}

}  // namespace gprisp
