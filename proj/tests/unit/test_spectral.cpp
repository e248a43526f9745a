#include <doctest.h>

#include <cmath>
#include <vector>

#include "gprisp/errors.hpp"
#include "gprisp/forward.hpp"
#include "gprisp/spectral.hpp"

using namespace gprisp;

TEST_SUITE("spectral") {

TEST_CASE("eigenfunction values and boundary conditions") {
    const Basis b = make_basis(0.9, 8);
    CHECK(basis_eval(b, 1, 0.45) == doctest::Approx(std::sqrt(2.0 / 0.9)).epsilon(1e-9));
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(basis_eval(b, k, 0.0)) < 1e-12);
        CHECK(std::abs(basis_eval(b, k, 0.9)) < 1e-12);
    }
    CHECK_THROWS_AS(basis_eval(b, 0, 0.1), invalid_input);
    CHECK_THROWS_AS(basis_eval(b, 9, 0.1), invalid_input);
    CHECK_THROWS_AS(make_basis(-0.9, 3), invalid_input);
}

TEST_CASE("eigenfunctions are orthonormal under the trapezoid inner product") {
    const Basis b = make_basis(0.9, 20);
    const int nodes = 2001;
    const double h = 0.9 / (nodes - 1);
    for (int j = 1; j <= 20; ++j) {
        for (int k = j; k <= 20; ++k) {
            double acc = 0.0;  // integrand vanishes at the ends
            for (int i = 1; i + 1 < nodes; ++i)
                acc += basis_eval(b, j, i * h) * basis_eval(b, k, i * h);
            CHECK(std::abs(acc * h - (j == k ? 1.0 : 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("projection of a basis element returns its unit vector") {
    PhysicalConfig cfg;
    const Basis b = make_basis(cfg.depth(), 5);
    const auto coeffs = project(b, SourceSpec::fourier({0.0, 0.0, 1.0}), cfg);
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(coeffs[k] - (k == 2 ? 1.0 : 0.0)) < 1e-8);
}

TEST_CASE("projection of the zero source is the zero vector") {
    PhysicalConfig cfg;
    const Basis b = make_basis(cfg.depth(), 6);
    for (double c : project(b, SourceSpec::box(0.0, 0.3, 0.7), cfg)) CHECK(c == 0.0);
}

TEST_CASE("twenty modes capture the two-Gaussian profile to 1%") {
    PhysicalConfig cfg;
    const SourceSpec f1 = SourceSpec::two_gaussian();
    const Basis b = make_basis(cfg.depth(), 20);
    const auto coeffs = project(b, f1, cfg);
    // truncation error by fine-grid quadrature against the synthesized sum
    const int nodes = 4001;
    const double h = cfg.depth() / (nodes - 1);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x = std::min(i * h, cfg.depth());
        const double f = source_eval(f1, cfg, x);
        const double d = f - synthesize(b, coeffs, x);
        const double w = (i == 0 || i + 1 == nodes) ? 0.5 : 1.0;
        num += w * d * d;
        den += w * f * f;
    }
    CHECK(std::sqrt(num / den) < 0.01);
}

TEST_CASE("synthesis basics and Parseval") {
    PhysicalConfig cfg;
    const Basis b = make_basis(0.9, 12);
    CHECK(synthesize(b, CoefVector(12, 0.0), 0.37) == 0.0);
    CoefVector e1(12, 0.0);
    e1[0] = 1.0;
    CHECK(synthesize(b, e1, 0.45) == doctest::Approx(1.49071).epsilon(1e-5));

    RngState rng(77);
    for (int modes : {12, 20}) {
        const Basis bn = make_basis(0.9, modes);
        CoefVector c = normal_samples(rng, modes);
        double sum_sq = 0.0;
        for (double v : c) sum_sq += v * v;
        const int nodes = 4001;
        const double h = 0.9 / (nodes - 1);
        double norm_sq = 0.0;
        for (int i = 1; i + 1 < nodes; ++i) {
            const double v = synthesize(bn, c, i * h);
            norm_sq += v * v;
        }
        CHECK(norm_sq * h == doctest::Approx(sum_sq).epsilon(1e-6));
    }
    CHECK_THROWS_AS(synthesize(b, CoefVector(5, 1.0), 0.1), invalid_input);
}

TEST_CASE("kernel functions start at zero") {
    PhysicalConfig cfg;
    cfg.M = 300;
    const Pulse p = make_pulse(8.0, 0.2);
    for (const auto& gk : kernel_functions(cfg, p, make_basis(cfg.depth(), 6)))
        CHECK(gk.values[0] == 0.0);
}

TEST_CASE("kernel quadrature is grid-converged") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(1.0, 0.2);
    const Basis b = make_basis(cfg.depth(), 1);
    const double coarse = kernel_functions(cfg, p, b)[0].values.back();
    PhysicalConfig fine = cfg;
    fine.M = 10 * cfg.M;
    const double refined = kernel_functions(fine, p, b)[0].values.back();
    CHECK(std::abs(coarse - refined) / std::abs(refined) < 1e-6);
}

TEST_CASE("kernel superposition equals the independent double-integral trace") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(1.0, 0.2);
    const Basis b = make_basis(cfg.depth(), 6);
    const auto kernels = kernel_functions(cfg, p, b);
    RngState rng(7);
    const CoefVector f = normal_samples(rng, 6);
    const Signal g = boundary_trace(cfg, p, SourceSpec::fourier(f), 8);
    Signal combo{g.grid, std::vector<double>(g.grid.count, 0.0)};
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < combo.grid.count; ++i)
            combo.values[i] += f[k] * kernels[k].values[i];
    CHECK(l2_distance(g, combo) / g.l2_norm() < 1e-5);
}

TEST_CASE("assembly with zero data gives a zero right-hand side") {
    PhysicalConfig cfg;
    cfg.M = 300;
    const Pulse p = make_pulse(8.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 4));
    const Signal zero{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
    const GramSystem sys = assemble(kernels, zero, 0.0);
    for (double v : sys.rhs) CHECK(v == 0.0);
}

TEST_CASE("assembly is consistent: data built from the kernels satisfies A f = b") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(8.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 8));
    RngState rng(13);
    const CoefVector f = normal_samples(rng, 8);
    Signal g{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
    for (int k = 0; k < 8; ++k)
        for (int i = 0; i <= cfg.M; ++i) g.values[i] += f[k] * kernels[k].values[i];
    const GramSystem sys = assemble(kernels, g, 0.0);
    for (int i = 0; i < 8; ++i) {
        double af = 0.0;
        for (int j = 0; j < 8; ++j) af += sys.matrix.at(i, j) * f[j];
        CHECK(af == doctest::Approx(sys.rhs[i]).epsilon(1e-10));
    }
}

TEST_CASE("gram matrices are positive semidefinite") {
    PhysicalConfig cfg;
    for (double omega : {1.0, 8.0}) {
        const Pulse p = make_pulse(omega, 0.2);
        const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 20));
        const Signal zero{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
        const GramSystem sys = assemble(kernels, zero, 0.0);
        const auto eig = sym_eigvals(sys.matrix);
        CHECK(eig.front() >= -1e-10 * eig.back());
    }
}

TEST_CASE("assembly rejects mismatched grids and negative alpha") {
    PhysicalConfig cfg;
    cfg.M = 100;
    const Pulse p = make_pulse(8.0, 0.2);
    const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 2));
    const Signal bad{{0.0, 0.02, 77}, std::vector<double>(77, 0.0)};
    CHECK_THROWS_AS(assemble(kernels, bad, 0.0), invalid_input);
    const Signal ok{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
    CHECK_THROWS_AS(assemble(kernels, ok, -1.0), invalid_input);
}

TEST_CASE("rescaling kappa leaves the alpha=0 solution and conditioning alone") {
    PhysicalConfig cfg;
    PhysicalConfig scaled = cfg;
    scaled.kappa = 3.7;
    const Pulse p = make_pulse(8.0, 0.2);
    const Basis b = make_basis(cfg.depth(), 8);
    const SourceSpec f1 = SourceSpec::two_gaussian();

    const GramSystem sys1 =
        assemble(kernel_functions(cfg, p, b), boundary_trace(cfg, p, f1, 2), 0.0);
    const GramSystem sys2 =
        assemble(kernel_functions(scaled, p, b), boundary_trace(scaled, p, f1, 2), 0.0);

    // A and b both scale by kappa^2
    const double k2 = 3.7 * 3.7;
    CHECK(sys2.matrix.at(3, 1) == doctest::Approx(k2 * sys1.matrix.at(3, 1)).epsilon(1e-12));
    CHECK(sys2.rhs[4] == doctest::Approx(k2 * sys1.rhs[4]).epsilon(1e-12));
    CHECK(condition_number(sys2.matrix, 0.0) ==
          doctest::Approx(condition_number(sys1.matrix, 0.0)).epsilon(1e-9));
}

TEST_CASE("conditioning grows with the cut-off for both pulses") {
    PhysicalConfig cfg;
    for (double omega : {1.0, 8.0}) {
        const Pulse p = make_pulse(omega, 0.2);
        const auto kernels = kernel_functions(cfg, p, make_basis(cfg.depth(), 20));
        const Signal zero{cfg.time_grid(), std::vector<double>(cfg.M + 1, 0.0)};
        const GramSystem sys = assemble(kernels, zero, 0.0);
        double prev = 0.0;
        for (int n : {5, 8, 11, 14, 17, 20}) {
            const double c = condition_number(sys.matrix.leading(n), 0.0);
            CHECK(c >= prev);
            prev = c;
        }
    }
}

}  // TEST_SUITE
