#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pairpack/chebyshev.hpp"
#include "pairpack/quadrature.hpp"

#include <cmath>

using namespace pairpack;

TEST_CASE("gauss-legendre matches Golub-Welsch nodes and weights") {
    for (int n : {1, 2, 5, 16, 64}) {
        const auto r = gauss_legendre<double>(n);
        Eigen::VectorXd x, w;
        oracle::gauss(n, x, w);
        CHECK((r.nodes - x).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((r.weights - w).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("n-point rule is exact through degree 2n-1") {
    const auto r = gauss_legendre<double>(6);
    for (int k = 0; k <= 11; ++k) {
        const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
        CHECK(integrate(r, [&](double x) { return std::pow(x, k); }, -1.0, 1.0) == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("mapped and adaptive integrals") {
    const auto r = gauss_legendre<double>(20);
    CHECK(integrate(r, [](double x) { return std::sin(x); }, 0.0, oracle::pi) == doctest::Approx(2).epsilon(1e-14));
    CHECK(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13) ==
          doctest::Approx(2.0 / 3).epsilon(1e-12));
    auto kink = [](double x) { return std::abs(x - 0.3); };
    CHECK(integrate_adaptive_split(kink, -1.0, 1.0, {0.3}) == doctest::Approx(0.5 * 1.69 + 0.5 * 0.49).epsilon(1e-14));
    auto osc = [](double x) { return std::complex<double>(std::cos(40 * x), std::sin(40 * x)); };
    const auto v = integrate_adaptive(osc, 0.0, 1.0, 1e-13);
    CHECK(std::abs(v - std::complex<double>(std::sin(40.0) / 40, (1 - std::cos(40.0)) / 40)) < 1e-12);
}

TEST_CASE("float scalar instantiation") {
    const auto r = gauss_legendre<float>(8);
    CHECK(integrate(r, [](float x) { return x * x; }, 0.0f, 3.0f) == doctest::Approx(9.0).epsilon(1e-5));
}

TEST_CASE("chebyshev interpolation and differentiation") {
    const int M = 32;
    const Eigen::VectorXd y = lobatto_points<double>(M);
    Eigen::VectorXd v(M + 1);
    for (int k = 0; k <= M; ++k) v(k) = std::exp(y(k)) * std::sin(2 * y(k));
    Eigen::VectorXd c = cheb_coeffs(v);
    cheb_chop(c, 1e-15);
    Eigen::VectorXd d1 = cheb_derivative(c);
    for (double t : {-0.9, -0.2, 0.0, 0.55, 1.0}) {
        CHECK(cheb_eval(c, t) == doctest::Approx(std::exp(t) * std::sin(2 * t)).epsilon(1e-14));
        CHECK(cheb_eval(d1, t) ==
              doctest::Approx(std::exp(t) * (std::sin(2 * t) + 2 * std::cos(2 * t))).epsilon(1e-12));
    }
}
