#include "gprisp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gprisp/errors.hpp"

namespace gprisp {

SymMatrix::SymMatrix(int order) : order_(order) {
    if (order < 1) throw invalid_input("SymMatrix: order must be >= 1");
    entries_.assign(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0);
}

double& SymMatrix::at(int i, int j) {
    if (j > i) std::swap(i, j);
    return entries_[static_cast<std::size_t>(i) * (i + 1) / 2 + j];
}

double SymMatrix::at(int i, int j) const {
    if (j > i) std::swap(i, j);
    return entries_[static_cast<std::size_t>(i) * (i + 1) / 2 + j];
}

SymMatrix SymMatrix::leading(int n) const {
    if (n < 1 || n > order_) throw invalid_input("SymMatrix::leading: bad order");
    SymMatrix sub(n);
    std::copy_n(entries_.begin(), static_cast<std::size_t>(n) * (n + 1) / 2,
                sub.entries_.begin());
    return sub;
}

double SymMatrix::max_diagonal() const {
    double m = at(0, 0);
    for (int i = 1; i < order_; ++i) m = std::max(m, at(i, i));
    return m;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < order_; ++i) {
        s += at(i, i) * at(i, i);
        for (int j = 0; j < i; ++j) s += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(s);
}

std::uint64_t RngState::next_u64() {
    // splitmix64: fixed-increment counter plus shift-multiply output mix.
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RngState::next_open01() {
    // 53 high bits, offset by half an ulp so 0 and 1 are never produced.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double trapezoid_integrate(std::span<const double> samples, double step) {
    if (samples.size() < 2) throw invalid_input("trapezoid_integrate: need >= 2 samples");
    if (!(step > 0.0)) throw invalid_input("trapezoid_integrate: step must be > 0");
    double acc = 0.5 * (samples.front() + samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) acc += samples[i];
    return acc * step;
}

std::vector<double> cholesky_solve(const SymMatrix& a, std::span<const double> b) {
    const int n = a.order();
    if (static_cast<int>(b.size()) != n)
        throw invalid_input("cholesky_solve: dimension mismatch");

    const double tol = 1e-14 * a.max_diagonal();

    // Lower factor in packed storage.
    SymMatrix l(n);
    for (int j = 0; j < n; ++j) {
        double d = a.at(j, j);
        for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (!(d > tol))
            throw not_positive_definite(
                "cholesky_solve: pivot " + std::to_string(d) + " at row " +
                std::to_string(j) + "; matrix not positive definite (alpha too small?)");
        l.at(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = a.at(i, j);
            for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = s / l.at(j, j);
        }
    }

    // L y = b
    std::vector<double> x(b.begin(), b.end());
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) x[i] -= l.at(i, k) * x[k];
        x[i] /= l.at(i, i);
    }
    // L^T x = y
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x[i] -= l.at(k, i) * x[k];
        x[i] /= l.at(i, i);
    }
    return x;
}

namespace {

double offdiag_norm(const SymMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < i; ++j) s += 2.0 * a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> sym_eigvals(const SymMatrix& a_in) {
    const int n = a_in.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (!std::isfinite(a_in.at(i, j)))
                throw invalid_input("sym_eigvals: non-finite entry");

    SymMatrix a = a_in;
    const double target = 1e-12 * a.frobenius_norm();

    for (int sweep = 0; sweep < 100 && offdiag_norm(a) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a.at(r, p), arq = a.at(r, q);
                    a.at(r, p) = arp - s * (arq + tau * arp);
                    a.at(r, q) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a.at(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

double condition_number(const SymMatrix& a, double alpha) {
    const auto vals = sym_eigvals(a);
    const double lo = vals.front() + alpha;
    const double hi = vals.back() + alpha;
    if (!(lo > 0.0))
        throw singular_matrix("condition_number: lambda_min + alpha = " +
                              std::to_string(lo) + " <= 0");
    return hi / lo;
}

std::vector<double> normal_samples(RngState& state, int count) {
    if (count < 1) throw invalid_input("normal_samples: count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    constexpr double two_pi = 6.283185307179586476925286766559;
    while (static_cast<int>(out.size()) < count) {
        const double u1 = state.next_open01();
        const double u2 = state.next_open01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        out.push_back(r * std::cos(two_pi * u2));
        if (static_cast<int>(out.size()) < count) out.push_back(r * std::sin(two_pi * u2));
    }
    return out;
}

}  // namespace gprisp
