#include "gprisp/inverse.hpp"

#include <cmath>

#include "gprisp/errors.hpp"

namespace gprisp {

namespace {

// ||sum_k c_k G_k - g||_L2 on the shared grid.
double residual_norm(std::span<const Signal> kernels, std::span<const double> coeffs,
                     const Signal& g) {
    const int nodes = g.grid.count;
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
        double r = -g.values[i];
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            r += coeffs[k] * kernels[k].values[i];
        const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
        acc += w * r * r;
    }
    return std::sqrt(acc * g.grid.step);
}

}  // namespace

Reconstruction solve(const GramSystem& sys, int modes) {
    const int n_max = sys.matrix.order();
    const int n = modes == 0 ? n_max : modes;
    if (n < 1 || n > n_max) throw invalid_input("solve: modes out of range");

    SymMatrix a = sys.matrix.leading(n);
    SymMatrix shifted = a;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += sys.alpha;

    Reconstruction rec;
    rec.coeffs = cholesky_solve(shifted, std::span<const double>(sys.rhs.data(), n));
    rec.alpha = sys.alpha;
    rec.modes = n;
    rec.cond = condition_number(a, sys.alpha);
    rec.discrepancy = residual_norm({sys.kernels.data(), static_cast<std::size_t>(n)},
                                    rec.coeffs, sys.data);
    return rec;
}

double rel_error(const SourceSpec& truth, const Reconstruction& rec, const Basis& basis,
                 const PhysicalConfig& cfg) {
    if (static_cast<int>(rec.coeffs.size()) > basis.modes)
        throw invalid_input("rel_error: more coefficients than basis modes");
    const Basis sub{basis.l, rec.modes};

    constexpr int nodes = 2001;
    const double h = basis.l / (nodes - 1);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x = i * h;
        const double f = source_eval(truth, cfg, x);
        const double d = f - synthesize(sub, rec.coeffs, x);
        const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
        num += w * d * d;
        den += w * f * f;
    }
    if (den == 0.0) throw invalid_input("rel_error: truth has zero norm");
    return std::sqrt(num / den);
}

int select_cutoff(std::span<const Signal> kernel_family, const Signal& g, double gamma1,
                  std::span<const int> scan) {
    if (scan.empty()) throw invalid_input("select_cutoff: empty scan");
    if (gamma1 < 0.0) throw invalid_input("select_cutoff: gamma1 must be >= 0");
    for (std::size_t i = 1; i < scan.size(); ++i)
        if (scan[i] <= scan[i - 1]) throw invalid_input("select_cutoff: scan must ascend");
    if (scan.back() > static_cast<int>(kernel_family.size()))
        throw invalid_input("select_cutoff: scan exceeds kernel family size");

    std::vector<Signal> kernels(kernel_family.begin(),
                                kernel_family.begin() + scan.back());
    const GramSystem sys = assemble(std::move(kernels), g, 0.0);

    int chosen = scan.front();
    bool found = false;
    for (int n : scan) {
        const Reconstruction rec = solve(sys, n);
        if (rec.discrepancy >= gamma1) {
            chosen = n;  // keep the largest admissible N
            found = true;
        }
    }
    return found ? chosen : scan.front();
}

double error_bound(const GramSystem& sys, double gamma1) {
    if (gamma1 < 0.0) throw invalid_input("error_bound: gamma1 must be >= 0");
    if (gamma1 == 0.0) return 0.0;
    double c1 = 0.0;
    for (const auto& k : sys.kernels) c1 = std::max(c1, k.l2_norm());
    const double cond = condition_number(sys.matrix, sys.alpha);
    return cond * std::sqrt(static_cast<double>(sys.matrix.order())) * c1 * gamma1;
}

}  // namespace gprisp
