#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace pairpack {

template <typename Scalar>
struct GaussRule {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;    // ascending, in [-1, 1]
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

/// n-point Gauss–Legendre rule on [-1, 1] by Newton iteration on the three-term recurrence.
template <typename Scalar = double>
GaussRule<Scalar> gauss_legendre(int n) {
    GaussRule<Scalar> r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
        Scalar dp = 0;
        for (int it = 0; it < 100; ++it) {
            Scalar p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            Scalar dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 4 * std::numeric_limits<Scalar>::epsilon()) break;
        }
        // one more derivative evaluation at the converged node
        Scalar p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1;
        dp = n * (x * p1 - p0) / (x * x - 1);
        Scalar w = 2 / ((1 - x * x) * dp * dp);
        r.nodes(i) = -x;
        r.nodes(n - 1 - i) = x;
        r.weights(i) = w;
        r.weights(n - 1 - i) = w;
    }
    if (n % 2 == 1) r.nodes(n / 2) = 0;
    return r;
}

/// Fixed rule mapped to [a, b].
template <typename F, typename Scalar>
auto integrate(const GaussRule<Scalar>& rule, F&& f, Scalar a, Scalar b) {
    const Scalar half = (b - a) / 2, mid = (a + b) / 2;
    using R = decltype(f(mid));
    R s = R(0);
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights(i) * f(mid + half * rule.nodes(i));
    return s * half;
}

namespace detail {

template <typename F, typename Scalar, typename R>
R adaptive_step(const GaussRule<Scalar>& rule, F& f, Scalar a, Scalar b, R whole, Scalar tol,
                int depth) {
    const Scalar m = (a + b) / 2;
    R left = integrate(rule, f, a, m);
    R right = integrate(rule, f, m, b);
    R both = left + right;
    if (depth <= 0 || std::abs(both - whole) <= tol) return both;
    return adaptive_step(rule, f, a, m, left, tol / 2, depth - 1) +
           adaptive_step(rule, f, m, b, right, tol / 2, depth - 1);
}

}  // namespace detail

/// Adaptive bisection with a 15-point Gauss–Legendre base rule; absolute tolerance.
template <typename F, typename Scalar>
auto integrate_adaptive(F&& f, Scalar a, Scalar b, Scalar tol = Scalar(1e-12), int max_depth = 40) {
    static const GaussRule<Scalar> rule = gauss_legendre<Scalar>(15);
    auto whole = integrate(rule, f, a, b);
    return detail::adaptive_step(rule, f, a, b, whole, tol, max_depth);
}

/// Adaptive integral with the interval split at the listed breakpoints (kinks of the integrand).
template <typename F, typename Scalar>
auto integrate_adaptive_split(F&& f, Scalar a, Scalar b, std::initializer_list<Scalar> breaks,
                              Scalar tol = Scalar(1e-12)) {
    using R = decltype(f(a));
    R s = R(0);
    Scalar lo = a;
    for (Scalar c : breaks) {
        if (c <= lo || c >= b) continue;
        s += integrate_adaptive(f, lo, c, tol);
        lo = c;
    }
    s += integrate_adaptive(f, lo, b, tol);
    return s;
}

}  // namespace pairpack
