#pragma once

// Reference computations used only by the tests. Nothing here calls into the library's
// numerics, so agreement is a genuine cross-check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

// mpmath, 30 digits
constexpr double s0 = -0.217233628211221657408279325562;
constexpr double s0_argmin = 4.49340945790906417530788092728;
constexpr double sup_g = 0.586568283339333313111528699931;
constexpr double sup_g_argmax = 4.08557388547682195451967660821;
constexpr double k00_c3zero_half = 0.461688222465712149151991142401;  // (1,1,0,1/2)
constexpr double selberg1_upper = 1.3274992963205883542656202092;
constexpr double dedekind2_upper = 2.33048772171245191926801943897;
constexpr double gonek_111 = 0.00224752203260395855686207901843;

/// Composite Simpson on [a, b] with n (even) panels.
template <typename F>
auto simpson(F&& f, double a, double b, int n = 20000) {
    const double hh = (b - a) / n;
    auto s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * hh);
    return s * (hh / 3);
}

/// Golub–Welsch Gauss–Legendre nodes on [-1, 1].
inline void gauss(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    x = es.eigenvalues();
    w = 2 * es.eigenvectors().row(0).transpose().array().square();
}

inline std::vector<double> legendre(int n, double t) {
    std::vector<double> p(n);
    p[0] = 1;
    if (n > 1) p[1] = t;
    for (int k = 2; k < n; ++k) p[k] = ((2 * k - 1) * t * p[k - 1] - (k - 1) * p[k - 2]) / k;
    return p;
}

/// Rayleigh–Ritz solution of c1 u + c2 ∫ u(α)|ξ-α|e^{-c3|ξ-α|} dα = e^{-2πiwξ} on [-Δ/2, Δ/2]
/// in a Legendre basis. K(w, z) = conj(k_w(conj z)) with k_w(z) = ∫ u e^{2πiξz} dξ.
class Galerkin {
public:
    Galerkin(double c1, double c2, double c3, double delta, int basis = 24, int q = 48)
        : h_(delta / 2), n_(basis) {
        gauss(q, x_, w_);
        auto kern = [&](double s) { return std::abs(s) * std::exp(-c3 * std::abs(s)); };
        Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n_, n_);
        for (int a = 0; a < q; ++a) {
            const double alpha = h_ * x_(a), wa = h_ * w_(a);
            const auto pa = legendre(n_, x_(a));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) Q(i, j) += c1 * wa * pa[i] * pa[j];
            // inner integral split at the kink β = α
            std::vector<double> inner(n_, 0.0);
            for (int side = 0; side < 2; ++side) {
                const double lo = side ? alpha : -h_, hi = side ? h_ : alpha;
                const double half = (hi - lo) / 2, mid = (hi + lo) / 2;
                for (int b = 0; b < q; ++b) {
                    const double beta = mid + half * x_(b);
                    const auto pb = legendre(n_, beta / h_);
                    const double kw = half * w_(b) * kern(alpha - beta);
                    for (int j = 0; j < n_; ++j) inner[j] += kw * pb[j];
                }
            }
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) Q(i, j) += c2 * wa * pa[i] * inner[j];
        }
        lu_ = Q.partialPivLu();
    }

    /// Legendre coefficients of u_w.
    Eigen::VectorXcd solve(cplx w) const {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n_);
        for (Eigen::Index a = 0; a < x_.size(); ++a) {
            const auto p = legendre(n_, x_(a));
            const cplx f = std::exp(cplx(0, -2 * pi) * w * (h_ * x_(a)));
            for (int j = 0; j < n_; ++j) rhs(j) += h_ * w_(a) * p[j] * f;
        }
        return lu_.solve(rhs);
    }

    cplx u(const Eigen::VectorXcd& coef, double xi) const {
        const auto p = legendre(n_, xi / h_);
        cplx s = 0;
        for (int j = 0; j < n_; ++j) s += coef(j) * p[j];
        return s;
    }

    cplx k(const Eigen::VectorXcd& coef, cplx z) const {
        cplx s = 0;
        for (Eigen::Index a = 0; a < x_.size(); ++a) {
            const double xi = h_ * x_(a);
            s += h_ * w_(a) * u(coef, xi) * std::exp(cplx(0, 2 * pi) * xi * z);
        }
        return s;
    }

    cplx K(cplx w, cplx z) const { return std::conj(k(solve(w), std::conj(z))); }

private:
    double h_;
    int n_;
    Eigen::VectorXd x_, w_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// ν̂(x) straight from the definition ∫ e^{-2πiαx} dν(α).
inline double nu_hat_direct(double c1, double c2, double c3, double delta, double x) {
    auto f = [&](double a) { return a * std::exp(-c3 * a) * std::cos(2 * pi * a * x); };
    return c1 + 2 * c2 * simpson(f, 0.0, delta, 40000);
}

}  // namespace oracle
