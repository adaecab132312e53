#pragma once

#include <cmath>
#include <complex>

namespace pairpack::detail {

// ∫_ℝ F for F whose Fourier transform lives in [-1/(2hs), 1/(2hs)]: the lattice sum hs·ΣF(n·hs)
// is exact, so only the truncation |n| <= N matters. Its 1/N tail is removed by Richardson.
// f(n) is called in the order 0, 1, ..., 2N, -1, ..., -2N.
template <typename F>
std::complex<double> lattice_integral(F&& f, double hs, long N) {
    std::complex<double> inner = f(0), outer = 0;
    for (long n = 1; n <= 2 * N; ++n) (n <= N ? inner : outer) += f(n);
    for (long n = -1; n >= -2 * N; --n) (n >= -N ? inner : outer) += f(n);
    const std::complex<double> sN = inner, s2N = inner + outer;
    return hs * (2.0 * s2N - sN);
}

}  // namespace pairpack::detail
