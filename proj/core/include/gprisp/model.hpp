#pragma once

#include <variant>
#include <vector>

#include "gprisp/numerics.hpp"

namespace gprisp {

/// Physical setup of the probing experiment. Units: time in ns, length in m,
/// so speeds are in m/ns (0.15 m/ns = 1.5e8 m/s).
struct PhysicalConfig {
    double c = 0.15;     // medium wave speed
    double c0 = 0.3;     // air-side wave speed
    double T = 12.0;     // record length
    double kappa = 1.0;  // source scale: H(t) = kappa * Phi''(t)
    int M = 1200;        // time samples minus 1

    /// Depth window l = c*T/2; sources live in (0, l).
    double depth() const { return 0.5 * c * T; }
    double dt() const { return T / M; }
    UniformGrid time_grid() const { return {0.0, dt(), M + 1}; }

    void validate() const;
};

/// Probing waveform Phi(t) = sin(omega*t + beta) exp(-nu*t) - phi0 for t >= 0
/// and 0 for t < 0. beta and phi0 are chosen so Phi(0) = Phi'(0) = 0 while
/// Phi''(0) != 0. A degenerate quadratic variant Phi(t) = t^2/2 (constant
/// second derivative) exists for kernel-free sanity checks.
struct Pulse {
    enum class Kind { damped_sine, quadratic };
    Kind kind = Kind::damped_sine;
    double omega = 0.0;  // rad/ns
    double nu = 0.0;     // 1/ns
    double beta = 0.0;   // rad
    double phi0 = 0.0;

    /// Phi and its derivatives up to order 3, in closed form; 0 for t < 0.
    double eval(double t, int derivative = 0) const;
};

Pulse make_pulse(double omega, double nu);
Pulse make_quadratic_pulse();

/// Effective source amplitude H(t) = kappa * Phi''(t) for t >= 0, else 0.
double effective_source(const PhysicalConfig& cfg, const Pulse& p, double t);

/// H'(t) = kappa * Phi'''(t), closed form (never differenced numerically).
double effective_source_rate(const PhysicalConfig& cfg, const Pulse& p, double t);

/// Incident background field: amplitude * Phi(t + z/c0) in the air half-space
/// z < 0, amplitude * Phi(t - z/c) in the medium, amplitude = -kappa/c^2.
double background_field(const PhysicalConfig& cfg, const Pulse& p, double z, double t);

/// Spacewise source profile F(x) on [0, l]. Gaussian centers and widths, box
/// bounds, are fractions of l so a profile is reusable across depth windows.
struct GaussianTerm {
    double amplitude = 0.0;
    double center_frac = 0.0;
    double width_frac = 0.0;
};

struct SourceSpec {
    struct GaussianMix {
        std::vector<GaussianTerm> terms;
    };
    struct Hat {};  // eta(4(x - 0.5 l)/l), eta(u) = max(0, 1 - |u|)
    struct Box {
        double amplitude = 0.0;
        double lo_frac = 0.0;
        double hi_frac = 0.0;
    };
    struct Fourier {
        std::vector<double> coeffs;  // F_1..F_N against the sine eigenbasis
    };

    std::variant<GaussianMix, Hat, Box, Fourier> shape = Hat{};

    static SourceSpec gaussian_mix(std::vector<GaussianTerm> terms);
    static SourceSpec hat();
    static SourceSpec box(double amplitude, double lo_frac, double hi_frac);
    static SourceSpec fourier(std::vector<double> coeffs);

    /// The reference two-Gaussian profile used throughout the experiments:
    /// exp(-((x-0.3l)/0.15l)^2) + exp(-((x-0.7l)/0.1l)^2).
    static SourceSpec two_gaussian();
    /// Three-Gaussian profile: -0.1, +0.1, +1 amplitudes at 0.3l, 0.5l, 0.7l,
    /// all with width 0.05l.
    static SourceSpec three_gaussian();
};

/// Pointwise F(x); Gaussian-mix values with |F| < 1e-12 are clamped to 0 so
/// the finite-support premise is literal. Throws for x outside [0, l].
double source_eval(const SourceSpec& s, const PhysicalConfig& cfg, double x);

/// Uniformly sampled time series on [0, T].
struct Signal {
    UniformGrid grid;
    std::vector<double> values;

    /// L2[0,T] norm by the trapezoid rule.
    double l2_norm() const;
};

/// L2 norm of the nodewise difference of two signals on one grid.
double l2_distance(const Signal& a, const Signal& b);

}  // namespace gprisp
