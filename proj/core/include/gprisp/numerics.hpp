#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gprisp {

/// Uniform 1D grid: nodes[i] = start + i*step, i = 0..count-1.
struct UniformGrid {
    double start = 0.0;
    double step = 0.0;
    int count = 0;

    double node(int i) const { return start + i * step; }
    double back() const { return node(count - 1); }
    bool operator==(const UniformGrid&) const = default;
};

/// Dense real symmetric matrix, lower triangle stored row-wise.
/// Entry (i,j) with j <= i lives at i*(i+1)/2 + j.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order);

    int order() const { return order_; }
    double& at(int i, int j);
    double at(int i, int j) const;

    /// Leading n x n principal submatrix (same packed layout).
    SymMatrix leading(int n) const;

    double max_diagonal() const;
    double frobenius_norm() const;

private:
    int order_ = 0;
    std::vector<double> entries_;  // order*(order+1)/2 values
};

/// Deterministic counter-based PRNG state (splitmix64 advance).
/// Identical seed => identical output stream, on every platform.
struct RngState {
    std::uint64_t state = 0;
    explicit RngState(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64();
    /// Uniform deviate strictly inside (0,1).
    double next_open01();
};

/// Composite trapezoid rule over uniformly spaced samples.
/// Exact for piecewise-linear integrands on the grid.
double trapezoid_integrate(std::span<const double> samples, double step);

/// Solve A x = b for symmetric positive definite A via Cholesky.
/// Throws not_positive_definite if a pivot falls below 1e-14 * max diagonal.
std::vector<double> cholesky_solve(const SymMatrix& a, std::span<const double> b);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// returned in ascending order. Off-diagonal norm is driven below
/// 1e-12 * ||A||_F.
std::vector<double> sym_eigvals(const SymMatrix& a);

/// 2-norm condition number of A + alpha*I for symmetric PSD A:
/// (lambda_max + alpha) / (lambda_min + alpha).
/// Throws singular_matrix when lambda_min + alpha <= 0.
double condition_number(const SymMatrix& a, double alpha);

/// `count` pseudo-normal N(0,1) deviates via Box-Muller on top of the
/// splitmix64 stream. Advances `state`; whole pairs of uniforms are
/// consumed so the stream position depends only on seed and count.
std::vector<double> normal_samples(RngState& state, int count);

}  // namespace gprisp
