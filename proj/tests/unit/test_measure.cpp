#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pairpack/measure.hpp"

#include <cmath>

using namespace pairpack;

namespace {

// G(0,t) written out in real arithmetic
double g0(double t) { return (2 - 2 * std::cos(t) - 2 * t * std::sin(t)) / (t * t); }

}  // namespace

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(Measure(0, 1, 0, 1), InvalidRegime);
    CHECK_THROWS_AS(Measure(1, -1, 0, 1), InvalidRegime);
    CHECK_THROWS_AS(Measure(1, 1, -0.5, 1), InvalidRegime);
    CHECK_THROWS_AS(Measure(1, 1, 0, 0), InvalidRegime);
    CHECK_THROWS_AS(Measure(1, NAN, 0, 1), InvalidRegime);
    const Measure m(2, 3, 0, 0.5);
    CHECK(m.sigma() == doctest::Approx(0.375));
}

TEST_CASE("admissibility gates") {
    CHECK(Measure(1, 5.0 / 3, 0, 1).is_admissible());
    CHECK_FALSE(Measure(1, 1.6667, 0, 1).is_admissible());
    CHECK(Measure(1, 1.7, 0, 1).is_extended_admissible());
    CHECK_FALSE(Measure(1, 1.705, 0, 1).is_extended_admissible());
    CHECK(extended_threshold() == doctest::Approx(1 / oracle::sup_g).epsilon(1e-10));
    CHECK(standard_threshold() == doctest::Approx(5.0 / 3));
    CHECK_THROWS_AS(require_admissible(Measure(1, 1.7, 0, 1)), NotAdmissible);
    CHECK_NOTHROW(require_admissible(Measure(1, 1.7, 0, 1), Gate::Extended));
}

TEST_CASE("g_surface against real-arithmetic forms") {
    // σ = 0 line
    for (double t : {0.3, 0.9, 1.5, 4.0, 12.0}) CHECK(g_surface(0, t) == doctest::Approx(g0(t)).epsilon(1e-12));
    // t = 0 line: (2/σ²)(-1 + e^{-σ}(1 + σ))
    for (double s : {0.5, 1.0, 3.0})
        CHECK(g_surface(s, 0) == doctest::Approx(2 / (s * s) * (-1 + std::exp(-s) * (1 + s))).epsilon(1e-12));
    CHECK(g_surface(1, 0) == doctest::Approx(-0.5285).epsilon(1e-4));
    CHECK(g_surface(0, 1e-9) == doctest::Approx(-1).epsilon(1e-12));
    // series and direct branches agree across |z| = 1
    CHECK(g_surface(0.6, 0.79999) == doctest::Approx(g_surface(0.6, 0.80001)).epsilon(1e-4));
}

TEST_CASE("sup_g and its argmax") {
    const SupG s = sup_g_argmax();
    CHECK(s.value == doctest::Approx(oracle::sup_g).epsilon(1e-12));
    CHECK(s.argmax == doctest::Approx(oracle::sup_g_argmax).epsilon(1e-6));
    CHECK(std::abs(g_surface(0, s.argmax) - s.value) <= 1e-9);
    CHECK(std::abs(sup_g() - 0.5864) <= 1e-3);
}

TEST_CASE("nu_hat against the defining integral") {
    CHECK(nu_hat(Measure(2, 0, 0, 1), 0.37) == 2.0);
    CHECK(nu_hat(Measure(1, 1, 0, 0.5), 0) == doctest::Approx(1.25).epsilon(1e-14));
    const double cases[][5] = {{1, 1, 4, 0.5, 0.8}, {1, 1, 0, 0.5, 0.01}, {2, 0.7, 1.5, 1.3, 2.2}, {1, 1, 10, 0.5, 0}};
    for (const auto& c : cases) {
        const Measure m(c[0], c[1], c[2], c[3]);
        CHECK(std::abs(nu_hat(m, c[4]) - oracle::nu_hat_direct(c[0], c[1], c[2], c[3], c[4])) < 1e-10);
        CHECK(nu_hat(m, c[4]) == nu_hat(m, -c[4]));
    }
}

TEST_CASE("norm equivalence constants bracket nu_hat") {
    auto nb = norm_bounds(Measure(1, 0, 0, 1));
    CHECK(nb.a_sq == 1);
    CHECK(nb.b_sq == 1);
    const Measure m(1, 1, 0, 0.5);
    nb = norm_bounds(m);
    CHECK(nb.b_sq == doctest::Approx(1.25));
    CHECK(nb.a_sq == doctest::Approx(0.25 * (4 - oracle::sup_g)).epsilon(1e-12));
    // for c3 = 0 the infimum of ν̂ is attained, so a_sq is sharp
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i <= 40000; ++i) {
        const double v = nu_hat(m, i * 1e-3);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo >= nb.a_sq - 1e-12);
    CHECK(lo == doctest::Approx(nb.a_sq).epsilon(1e-6));
    CHECK(hi <= nb.b_sq + 1e-12);
    CHECK_THROWS_AS(norm_bounds(Measure(1, 1.8, 0, 1)), NotAdmissible);
}
