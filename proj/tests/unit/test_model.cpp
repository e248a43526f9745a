#include <doctest.h>

#include <cmath>

#include "gprisp/errors.hpp"
#include "gprisp/model.hpp"

using namespace gprisp;

TEST_SUITE("model") {

TEST_CASE("config derives the depth window and validates") {
    PhysicalConfig cfg;
    CHECK(cfg.depth() == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(cfg.dt() == doctest::Approx(0.01).epsilon(1e-15));
    PhysicalConfig bad = cfg;
    bad.kappa = 0.0;
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = cfg;
    bad.M = 1;
    CHECK_THROWS_AS(bad.validate(), invalid_input);
}

TEST_CASE("pulse phase matches the reported values") {
    CHECK(make_pulse(8.0, 0.2).beta == doctest::Approx(1.5458).epsilon(1e-4));
    CHECK(make_pulse(1.0, 0.2).beta == doctest::Approx(1.3734).epsilon(1e-4));
}

TEST_CASE("pulses start at rest") {
    for (auto [omega, nu] : {std::pair{8.0, 0.2}, {1.0, 0.2}, {3.5, 0.0}, {0.7, 2.0}}) {
        const Pulse p = make_pulse(omega, nu);
        CHECK(std::abs(p.eval(0.0, 0)) < 1e-12);
        CHECK(std::abs(p.eval(0.0, 1)) < 1e-12);
        CHECK(std::abs(p.eval(0.0, 2)) > 0.0);
    }
    CHECK_THROWS_AS(make_pulse(0.0, 0.2), invalid_input);
    CHECK_THROWS_AS(make_pulse(-1.0, 0.2), invalid_input);
}

TEST_CASE("second derivative at the front matches the reported magnitudes") {
    CHECK(make_pulse(8.0, 0.2).eval(0.0, 2) == doctest::Approx(-64.02).epsilon(1e-3));
    CHECK(make_pulse(1.0, 0.2).eval(0.0, 2) == doctest::Approx(-1.02).epsilon(1e-2));
}

TEST_CASE("pulse is causal") {
    const Pulse p = make_pulse(8.0, 0.2);
    for (int d = 0; d <= 3; ++d) CHECK(p.eval(-1.0, d) == 0.0);
}

TEST_CASE("finite differences confirm the closed-form derivative") {
    const Pulse p = make_pulse(8.0, 0.2);
    const double h = 1e-4;
    RngState rng(9);
    for (int i = 0; i < 20; ++i) {
        const double t = 0.1 + 11.8 * rng.next_open01();
        const double fd = (p.eval(t + h) - p.eval(t - h)) / (2 * h);
        CHECK(std::abs(fd - p.eval(t, 1)) < 1e-5);
        const double fd2 = (p.eval(t + h) - 2 * p.eval(t) + p.eval(t - h)) / (h * h);
        CHECK(std::abs(fd2 - p.eval(t, 2)) < 1e-3);
    }
}

TEST_CASE("effective source is kappa * Phi'' and causal") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(8.0, 0.2);
    CHECK(effective_source(cfg, p, 0.0) == doctest::Approx(-64.02).epsilon(1e-3));
    CHECK(effective_source(cfg, p, -0.5) == 0.0);
    cfg.kappa = 2.5;
    CHECK(effective_source(cfg, p, 1.0) == doctest::Approx(2.5 * p.eval(1.0, 2)).epsilon(1e-14));
}

TEST_CASE("effective source integrates to kappa*(Phi'(t) - Phi'(0))") {
    PhysicalConfig cfg;
    for (double omega : {8.0, 1.0}) {
        const Pulse p = make_pulse(omega, 0.2);
        for (double t : {1.0, 6.0, 12.0}) {
            const double h = 5e-5;
            const int n = static_cast<int>(std::round(t / h));
            double acc = 0.5 * (effective_source(cfg, p, 0.0) + effective_source(cfg, p, t));
            for (int i = 1; i < n; ++i) acc += effective_source(cfg, p, i * (t / n));
            const double quad = acc * (t / n);
            const double exact = cfg.kappa * (p.eval(t, 1) - p.eval(0.0, 1));
            CHECK(std::abs(quad - exact) < 1e-6);
        }
    }
}

TEST_CASE("quadratic pulse has constant curvature") {
    const Pulse q = make_quadratic_pulse();
    CHECK(q.eval(3.0) == doctest::Approx(4.5));
    CHECK(q.eval(3.0, 1) == doctest::Approx(3.0));
    CHECK(q.eval(3.0, 2) == doctest::Approx(1.0));
    CHECK(q.eval(3.0, 3) == 0.0);
    CHECK(q.eval(-1.0, 2) == 0.0);
}

TEST_CASE("hat source peaks at the center and vanishes at the support edges") {
    PhysicalConfig cfg;
    const double l = cfg.depth();
    const SourceSpec hat = SourceSpec::hat();
    CHECK(source_eval(hat, cfg, 0.5 * l) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(source_eval(hat, cfg, 0.25 * l) == 0.0);
    CHECK(source_eval(hat, cfg, 0.75 * l) == 0.0);
    CHECK_THROWS_AS(source_eval(hat, cfg, -0.1), invalid_input);
    CHECK_THROWS_AS(source_eval(hat, cfg, l + 0.1), invalid_input);
}

TEST_CASE("two-Gaussian profile at the first center") {
    PhysicalConfig cfg;
    const SourceSpec f1 = SourceSpec::two_gaussian();
    const double expected = 1.0 + std::exp(-16.0);
    CHECK(source_eval(f1, cfg, 0.3 * cfg.depth()) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("narrow catalog entries vanish at both ends of the window") {
    PhysicalConfig cfg;
    const double l = cfg.depth();
    for (const auto& s : {SourceSpec::three_gaussian(), SourceSpec::hat(),
                          SourceSpec::box(2.0, 0.4, 0.6)}) {
        CHECK(std::abs(source_eval(s, cfg, 0.0)) < 1e-6);
        CHECK(std::abs(source_eval(s, cfg, l)) < 1e-6);
    }
}

TEST_CASE("gaussian tails below 1e-12 are clamped to zero") {
    PhysicalConfig cfg;
    const SourceSpec s = SourceSpec::gaussian_mix({{1.0, 0.5, 0.02}});
    CHECK(source_eval(s, cfg, 0.0) == 0.0);
    CHECK(source_eval(s, cfg, cfg.depth()) == 0.0);
}

TEST_CASE("source constructors validate their parameters") {
    CHECK_THROWS_AS(SourceSpec::gaussian_mix({{1.0, 0.5, 0.0}}), invalid_input);
    CHECK_THROWS_AS(SourceSpec::box(1.0, 0.6, 0.4), invalid_input);
    CHECK_THROWS_AS(SourceSpec::fourier({}), invalid_input);
}

TEST_CASE("background field is continuous across the interface") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(8.0, 0.2);
    for (double t : {2.0, 6.0}) {
        const double below = background_field(cfg, p, -1e-12, t);
        const double above = background_field(cfg, p, 1e-12, t);
        CHECK(std::abs(below - above) < 1e-8);
    }
}

TEST_CASE("background field is causal in the medium") {
    PhysicalConfig cfg;
    const Pulse p = make_pulse(8.0, 0.2);
    CHECK(background_field(cfg, p, 0.3, 1.0) == 0.0);  // t < z/c
    const double amplitude = -cfg.kappa / (cfg.c * cfg.c);
    CHECK(background_field(cfg, p, 0.0, 4.0) ==
          doctest::Approx(amplitude * p.eval(4.0)).epsilon(1e-14));
}

TEST_CASE("signal norm uses the trapezoid weights") {
    Signal s{{0.0, 0.5, 3}, {1.0, 1.0, 1.0}};
    CHECK(s.l2_norm() == doctest::Approx(1.0).epsilon(1e-14));
    Signal t{{0.0, 0.5, 3}, {0.0, 1.0, 0.0}};
    // difference (1,0,1): norm^2 = step * (1/2 + 0 + 1/2)
    CHECK(l2_distance(s, t) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

}  // TEST_SUITE
