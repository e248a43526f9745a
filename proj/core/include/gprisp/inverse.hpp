#pragma once

#include <optional>
#include <span>

#include "gprisp/spectral.hpp"

namespace gprisp {

/// Result of one Tikhonov solve.
struct Reconstruction {
    CoefVector coeffs;       // F_alpha^N
    double alpha = 0.0;
    int modes = 0;           // N
    double discrepancy = 0;  // eta = ||sum_k F_k G_k - g||_L2
    std::optional<double> relative_error;  // eps_F when the truth is known
    double cond = 1.0;       // condition number of A^N + alpha I
};

/// Solve (A^N + alpha I) F = b^N via Cholesky for the leading `modes` block
/// (0 = all modes). The discrepancy is evaluated directly on the residual
/// signal, not from the quadratic form, so consistent systems report
/// eta at rounding level rather than at cancellation level.
Reconstruction solve(const GramSystem& sys, int modes = 0);

/// eps_F = ||F - F^N||_L2(0,l) / ||F||_L2(0,l) on a 2001-node trapezoid grid.
double rel_error(const SourceSpec& truth, const Reconstruction& rec, const Basis& basis,
                 const PhysicalConfig& cfg);

/// Discrepancy-principle cut-off choice: the largest N in `scan` whose
/// alpha=0 discrepancy stays at or above the absolute noise level gamma1.
/// gamma1 = 0 returns max(scan); if every candidate under-shoots, min(scan).
int select_cutoff(std::span<const Signal> kernel_family, const Signal& g, double gamma1,
                  std::span<const int> scan);

/// A-priori coefficient-perturbation bound C(A,alpha) * sqrt(N) * C1 * gamma1
/// with C1 = max_j ||G_j||_L2. An upper estimate, not an error measurement.
double error_bound(const GramSystem& sys, double gamma1);

}  // namespace gprisp
