#include "gprisp/model.hpp"

#include <cmath>
#include <complex>

#include "gprisp/errors.hpp"

namespace gprisp {

void PhysicalConfig::validate() const {
    if (!(c > 0.0)) throw invalid_input("PhysicalConfig: c must be > 0");
    if (!(c0 > 0.0)) throw invalid_input("PhysicalConfig: c0 must be > 0");
    if (!(T > 0.0)) throw invalid_input("PhysicalConfig: T must be > 0");
    if (kappa == 0.0) throw invalid_input("PhysicalConfig: kappa must be nonzero");
    if (M < 2) throw invalid_input("PhysicalConfig: M must be >= 2");
}

double Pulse::eval(double t, int derivative) const {
    if (t < 0.0) return 0.0;
    if (derivative < 0 || derivative > 3) throw invalid_input("Pulse::eval: derivative order must be 0..3");

    if (kind == Kind::quadratic) {
        switch (derivative) {
            case 0: return 0.5 * t * t;
            case 1: return t;
            case 2: return 1.0;
            default: return 0.0;
        }
    }

    // Phi(t) = Im(exp(i beta + z t)) - phi0 with z = -nu + i omega, so the
    // n-th derivative is Im(z^n exp(i beta + z t)).
    const std::complex<double> z(-nu, omega);
    std::complex<double> w = std::exp(std::complex<double>(-nu * t, omega * t + beta));
    for (int n = 0; n < derivative; ++n) w *= z;
    return derivative == 0 ? w.imag() - phi0 : w.imag();
}

Pulse make_pulse(double omega, double nu) {
    if (!(omega > 0.0)) throw invalid_input("make_pulse: omega must be > 0");
    if (nu < 0.0) throw invalid_input("make_pulse: nu must be >= 0");
    Pulse p;
    p.omega = omega;
    p.nu = nu;
    p.beta = std::atan2(omega, nu);  // arctan(omega/nu), exact at nu = 0
    p.phi0 = std::sin(p.beta);
    return p;
}

Pulse make_quadratic_pulse() {
    Pulse p;
    p.kind = Pulse::Kind::quadratic;
    return p;
}

double effective_source(const PhysicalConfig& cfg, const Pulse& p, double t) {
    return t < 0.0 ? 0.0 : cfg.kappa * p.eval(t, 2);
}

double effective_source_rate(const PhysicalConfig& cfg, const Pulse& p, double t) {
    return t < 0.0 ? 0.0 : cfg.kappa * p.eval(t, 3);
}

double background_field(const PhysicalConfig& cfg, const Pulse& p, double z, double t) {
    const double amplitude = -cfg.kappa / (cfg.c * cfg.c);
    return amplitude * (z < 0.0 ? p.eval(t + z / cfg.c0) : p.eval(t - z / cfg.c));
}

SourceSpec SourceSpec::gaussian_mix(std::vector<GaussianTerm> terms) {
    for (const auto& g : terms)
        if (!(g.width_frac > 0.0)) throw invalid_input("gaussian_mix: width must be > 0");
    SourceSpec s;
    s.shape = GaussianMix{std::move(terms)};
    return s;
}

SourceSpec SourceSpec::hat() {
    SourceSpec s;
    s.shape = Hat{};
    return s;
}

SourceSpec SourceSpec::box(double amplitude, double lo_frac, double hi_frac) {
    if (!(0.0 <= lo_frac && lo_frac < hi_frac && hi_frac <= 1.0))
        throw invalid_input("box: need 0 <= lo < hi <= 1 (fractions of l)");
    SourceSpec s;
    s.shape = Box{amplitude, lo_frac, hi_frac};
    return s;
}

SourceSpec SourceSpec::fourier(std::vector<double> coeffs) {
    if (coeffs.empty()) throw invalid_input("fourier: empty coefficient vector");
    SourceSpec s;
    s.shape = Fourier{std::move(coeffs)};
    return s;
}

SourceSpec SourceSpec::two_gaussian() {
    return gaussian_mix({{1.0, 0.3, 0.15}, {1.0, 0.7, 0.1}});
}

SourceSpec SourceSpec::three_gaussian() {
    return gaussian_mix({{-0.1, 0.3, 0.05}, {0.1, 0.5, 0.05}, {1.0, 0.7, 0.05}});
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

struct SourceEvaluator {
    double x;
    double l;

    double operator()(const SourceSpec::GaussianMix& g) const {
        double v = 0.0;
        for (const auto& term : g.terms) {
            const double u = (x - term.center_frac * l) / (term.width_frac * l);
            v += term.amplitude * std::exp(-u * u);
        }
        return std::abs(v) < 1e-12 ? 0.0 : v;
    }
    double operator()(const SourceSpec::Hat&) const {
        const double u = 4.0 * (x - 0.5 * l) / l;
        return std::max(0.0, 1.0 - std::abs(u));
    }
    double operator()(const SourceSpec::Box& b) const {
        return (x >= b.lo_frac * l && x <= b.hi_frac * l) ? b.amplitude : 0.0;
    }
    double operator()(const SourceSpec::Fourier& f) const {
        const double scale = std::sqrt(2.0 / l);
        double v = 0.0;
        for (std::size_t k = 0; k < f.coeffs.size(); ++k)
            v += f.coeffs[k] * scale * std::sin((k + 1) * kPi * x / l);
        return v;
    }
};

}  // namespace

double source_eval(const SourceSpec& s, const PhysicalConfig& cfg, double x) {
    const double l = cfg.depth();
    if (x < 0.0 || x > l) throw invalid_input("source_eval: x outside [0, l]");
    return std::visit(SourceEvaluator{x, l}, s.shape);
}

double Signal::l2_norm() const {
    if (static_cast<int>(values.size()) != grid.count || grid.count < 2)
        throw invalid_input("Signal: values/grid size mismatch");
    double acc = 0.5 * (values.front() * values.front() + values.back() * values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) acc += values[i] * values[i];
    return std::sqrt(acc * grid.step);
}

double l2_distance(const Signal& a, const Signal& b) {
    if (!(a.grid == b.grid)) throw invalid_input("l2_distance: grid mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        const double w = (i == 0 || i + 1 == a.values.size()) ? 0.5 : 1.0;
        acc += w * d * d;
    }
    return std::sqrt(acc * a.grid.step);
}

}  // namespace gprisp
