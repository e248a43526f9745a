#pragma once

#include <vector>

#include "gprisp/model.hpp"
#include "gprisp/numerics.hpp"

namespace gprisp {

/// Sine eigenbasis on (0, l): X_k(x) = sqrt(2/l) sin(k pi x / l), k = 1..modes.
struct Basis {
    double l = 0.0;
    int modes = 0;

    double eigenvalue(int k) const;  // lambda_k = k pi / l
};

Basis make_basis(double l, int modes);

/// Fourier coefficients F_1..F_N against the sine eigenbasis.
using CoefVector = std::vector<double>;

/// Normalized eigenfunction X_k(x); k must lie in 1..modes.
double basis_eval(const Basis& b, int k, double x);

/// F_k = int_0^l F(x) X_k(x) dx by trapezoid on a fixed 2001-node grid,
/// decoupling source-representation error from time-quadrature error.
CoefVector project(const Basis& b, const SourceSpec& s, const PhysicalConfig& cfg);

/// Partial sum F^N(x) = sum_k c_k X_k(x).
double synthesize(const Basis& b, const CoefVector& c, double x);

/// Scale carried by the kernel functions: kappa * c0 / (c (c + c0)).
double kernel_prefactor(const PhysicalConfig& cfg);

/// Kernel responses G_k(t) = P int_0^{ct/2} X_k(xi) (Phi'(t-2xi/c) - Phi'(0)) dxi
/// sampled on the M+1-node time grid, one Signal per basis mode. These depend
/// only on the setup, not on measured data, so they are computed once and
/// reused across experiments.
std::vector<Signal> kernel_functions(const PhysicalConfig& cfg, const Pulse& p,
                                     const Basis& b);

/// Normal-equations system of the regularized least-squares fit:
/// matrix A_ij = int_0^T G_i G_j dt, rhs b_j = int_0^T G_j g dt.
struct GramSystem {
    std::vector<Signal> kernels;
    Signal data;
    SymMatrix matrix;
    std::vector<double> rhs;
    double alpha = 0.0;
    double prefactor = 1.0;  // kernel scale, kept so alpha > 0 runs are reproducible
};

/// Assemble the Gram matrix and right-hand side by trapezoid over [0, T].
/// Kernels and data must share one grid; only the lower triangle is computed.
GramSystem assemble(std::vector<Signal> kernels, Signal g, double alpha,
                    double prefactor = 1.0);

}  // namespace gprisp
