#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace pairpack {

/// Chebyshev–Lobatto points cos(kπ/M), k = 0..M, on [-1, 1] (descending).
template <typename Real = double>
Eigen::Matrix<Real, Eigen::Dynamic, 1> lobatto_points(int M) {
    Eigen::Matrix<Real, Eigen::Dynamic, 1> x(M + 1);
    for (int k = 0; k <= M; ++k) x(k) = std::cos(std::numbers::pi_v<Real> * k / M);
    return x;
}

/// Coefficients of the interpolant through values at lobatto_points(M) (a direct DCT-I).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> cheb_coeffs(
    const Eigen::MatrixBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    const int M = int(v.size()) - 1;
    const double pi = std::numbers::pi;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c(M + 1);
    for (int j = 0; j <= M; ++j) {
        Scalar s = Scalar(0);
        for (int k = 0; k <= M; ++k) {
            double wk = (k == 0 || k == M) ? 0.5 : 1.0;
            s += wk * v(k) * std::cos(pi * double(j) * k / M);
        }
        c(j) = s * (2.0 / M);
    }
    c(0) /= 2.0;
    c(M) /= 2.0;
    return c;
}

/// Zero the trailing coefficients that sit below rel_tol times the largest one.
template <typename Derived>
void cheb_chop(Eigen::MatrixBase<Derived>& c, double rel_tol) {
    const double cap = rel_tol * c.cwiseAbs().maxCoeff();
    Eigen::Index last = c.size() - 1;
    while (last > 0 && std::abs(c(last)) <= cap) --last;
    for (Eigen::Index j = last + 1; j < c.size(); ++j) c(j) = 0;
}

/// Coefficients of the derivative on [-1, 1].
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> cheb_derivative(
    const Eigen::MatrixBase<Derived>& c) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = c.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
    if (n < 2) return d;
    d(n - 2) = 2.0 * double(n - 1) * c(n - 1);
    for (Eigen::Index k = n - 2; k >= 1; --k)
        d(k - 1) = (k + 1 < n ? d(k + 1) : Scalar(0)) + 2.0 * double(k) * c(k);
    d(0) /= 2.0;
    return d;
}

/// Clenshaw evaluation at x in [-1, 1].
template <typename Derived>
typename Derived::Scalar cheb_eval(const Eigen::MatrixBase<Derived>& c, double x) {
    using Scalar = typename Derived::Scalar;
    Scalar b1 = Scalar(0), b2 = Scalar(0);
    for (Eigen::Index k = c.size() - 1; k >= 1; --k) {
        Scalar b0 = c(k) + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c(0) + x * b1 - b2;
}

}  // namespace pairpack
