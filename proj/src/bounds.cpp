#include "pairpack/bounds.hpp"

#include "pairpack/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace pairpack {

namespace {

S0 compute_s0() {
    // sin x/x is smallest where tan x = x on (π, 3π/2); f(x) = sin x - x cos x vanishes there
    const double pi = std::acos(-1.0);
    double lo = pi + 1e-9, hi = 1.5 * pi - 1e-9;
    auto f = [](double x) { return std::sin(x) - x * std::cos(x); };
    double x = 4.49;
    for (int it = 0; it < 100; ++it) {
        const double fx = f(x);
        (fx > 0 ? lo : hi) = x;  // f > 0 left of the root
        double nx = x - fx / (x * std::sin(x));
        if (!(nx > lo && nx < hi)) nx = (lo + hi) / 2;
        if (std::abs(nx - x) < 1e-16 * x) {
            x = nx;
            break;
        }
        x = nx;
    }
    return {std::sin(x) / x, x};
}

double cor8_lower(double inv_k) { return std::max(0.0, 0.5 + s0() * (inv_k - 1)) + 0.5; }

}  // namespace

S0 s0_argmin() {
    static const S0 cached = compute_s0();
    return cached;
}

double s0() { return s0_argmin().value; }

BoundsReport average_bounds(const Measure& m, Gate gate) {
    const double K = kernel_k00(m, gate);
    BoundsReport r;
    r.measure = m;
    r.c_nu_upper = 1 / K;
    r.upper = r.c_nu_upper;
    r.lower_thm1 = 1 + s0() * (r.c_nu_upper - 1);
    r.clamp_active = 0.5 + s0() * (r.c_nu_upper - 1) < 0;
    r.lower_cor8 = cor8_lower(r.c_nu_upper);
    r.lower_thm2 = 0.5;
    r.best_lower = std::max(r.lower_thm1, r.lower_cor8);
    return r;
}

BoundPair selberg_bounds(int degree) {
    if (degree < 1) throw InvalidRegime("Selberg degree must be >= 1");
    const double m = degree, r2 = std::sqrt(2.0);
    const double upper = 1 / (r2 * std::tan(1 / (r2 * m))) + 1 / (2 * m);
    return {cor8_lower(upper), upper};
}

BoundPair dedekind_bounds(int n) {
    if (n < 1) throw InvalidRegime("field degree must be >= 1");
    const double upper = std::sqrt(n / 2.0) / std::tan(1 / std::sqrt(2.0 * n)) + 0.5;
    return {cor8_lower(upper), upper};
}

BoundPair reim_zeta_bounds(double c) {
    if (!(c >= 0)) throw InvalidRegime("reim_zeta_bounds needs c >= 0");
    const double inv_k = 1 / kernel_k00(Measure(1, 1, 4 * c, 0.5));
    return {1 + s0() * (inv_k - 1), inv_k};
}

std::vector<Figure1Row> figure1_data(double c_min, double c_max, int steps) {
    if (!(c_min >= 0 && c_max > c_min) || steps < 1)
        throw InvalidRegime("figure1 needs 0 <= c_min < c_max and steps >= 1");
    std::vector<Figure1Row> rows;
    rows.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double c = i == steps ? c_max : c_min + (c_max - c_min) * i / steps;
        const BoundPair b = reim_zeta_bounds(c);
        rows.push_back({c, b.lower, b.upper});
    }
    return rows;
}

double gonek_ki_conjectured_average(double b, double ell, double c) {
    if (!(ell > 0) || !(c >= 0)) throw InvalidRegime("conjectured average needs ell > 0, c >= 0");
    const double x = 4 * c * ell;
    const double ratio = x < 1e-8 ? 1 - x / 2 : -std::expm1(-x) / x;
    return 0.5 * std::exp(-4 * c * b) * ratio;
}

RefutationThreshold refutation_threshold(double c, double b, double floor) {
    if (!(c > 0) || !(b > 0.5) || !(floor > 0))
        throw InvalidRegime("refutation_threshold needs c > 0, b > 1/2, floor > 0");
    if (0.5 * std::exp(-4 * c * b) <= floor) return {0, ThresholdStatus::AlreadyBelow};
    double lo = 0, hi = 1;
    while (gonek_ki_conjectured_average(b, hi, c) > floor) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1e-10 * std::max(1.0, hi)) {
        const double mid = (lo + hi) / 2;
        (gonek_ki_conjectured_average(b, mid, c) > floor ? lo : hi) = mid;
    }
    return {hi, ThresholdStatus::Crossing};
}

}  // namespace pairpack
