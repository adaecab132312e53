#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace pairpack::detail {

using cplx = std::complex<double>;

constexpr double pi = std::numbers::pi;

/// e^{-g} sinh(x)/x
inline cplx shc_scaled(cplx x, double g) {
    if (std::abs(x) < 1.0) {
        cplx sum = 0, term = 1, x2 = x * x;
        for (int k = 1; k < 30; ++k) {
            sum += term;
            term *= x2 / double((2 * k) * (2 * k + 1));
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum * std::exp(-g);
    }
    return (std::exp(x - g) - std::exp(-x - g)) / (2.0 * x);
}

/// e^{-g} d/dx[sinh(x)/x]
inline cplx dshc_scaled(cplx x, double g) {
    if (std::abs(x) < 1.0) {
        // sum_{k>=1} 2k x^{2k-1}/(2k+1)!
        cplx sum = 0, xp = x, x2 = x * x;
        double fact = 6;
        for (int k = 1; k < 30; ++k) {
            cplx term = 2.0 * k * xp / fact;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            xp *= x2;
            fact *= double((2 * k + 2) * (2 * k + 3));
        }
        return sum * std::exp(-g);
    }
    cplx ep = std::exp(x - g), em = std::exp(-x - g);
    return (x * (ep + em) / 2.0 - (ep - em) / 2.0) / (x * x);
}

/// sin(πΔu)/(πu), with value Δ at u = 0.
inline cplx sinc_shift(double delta, cplx u) {
    cplx x = pi * delta * u;
    if (std::abs(x) < 1e-3) {
        cplx x2 = x * x;
        return delta * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    }
    return std::sin(x) / (pi * u);
}

/// ∫_0^h α^k e^{sα} dα
inline cplx J(int k, cplx s, double h) {
    if (std::abs(s) * h <= 1.0) {
        cplx sum = 0, sp = 1;
        double hp = std::pow(h, k + 1), fact = 1;
        for (int n = 0; n < 40; ++n) {
            cplx term = sp * hp / (fact * (n + k + 1));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            sp *= s;
            hp *= h;
            fact *= n + 1;
        }
        return sum;
    }
    cplx esh = std::exp(s * h);
    cplx j = (esh - 1.0) / s;
    double hk = 1;
    for (int i = 1; i <= k; ++i) {
        hk *= h;
        j = (hk * esh - double(i) * j) / s;
    }
    return j;
}

}  // namespace pairpack::detail
