#include "pairpack/fredholm.hpp"

#include "pairpack/chebyshev.hpp"
#include "pairpack/quadrature.hpp"
#include "special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pairpack {

using detail::pi;

double oracle_sigma_limit() { return 2.0; }

namespace {

// Barycentric interpolation from (nodes, bary, values) to t.
template <typename V>
auto bary_eval(const Eigen::VectorXd& nodes, const Eigen::VectorXd& bary, const V& values, double t) {
    using S = typename V::Scalar;
    S num = S(0);
    double den = 0;
    for (Eigen::Index j = 0; j < nodes.size(); ++j) {
        const double d = t - nodes(j);
        if (d == 0) return S(values(j));
        const double q = bary(j) / d;
        num += q * values(j);
        den += q;
    }
    return S(num / den);
}

}  // namespace

NystromSystem build_nystrom(const Measure& m, int n) {
    if (n < 16) throw InvalidRegime("Nystrom solver needs at least 16 nodes");
    const double h = m.delta / 2;
    const GaussRule<double> rule = gauss_legendre<double>(n);
    NystromSystem sys;
    sys.measure = m;
    sys.nodes = h * rule.nodes;
    sys.weights = h * rule.weights;
    sys.bary.resize(n);
    for (int j = 0; j < n; ++j) {
        const double x = rule.nodes(j);
        sys.bary(j) = (j % 2 ? -1.0 : 1.0) * std::sqrt((1 - x * x) * rule.weights(j));
    }
    sys.matrix = m.c1 * Eigen::MatrixXd::Identity(n, n);
    if (m.c2 == 0) return sys;

    // Two panels per target, split at the kink α = ξ_i; u is read off the global
    // interpolant at the panel points.
    const GaussRule<double> panel = gauss_legendre<double>(std::max(32, n / 4));
    Eigen::ArrayXd q(n);
    Eigen::RowVectorXd row(n);
    for (int i = 0; i < n; ++i) {
        const double xi = sys.nodes(i);
        row.setZero();
        const double ends[2][2] = {{-h, xi}, {xi, h}};
        for (const auto& e : ends) {
            const double half = (e[1] - e[0]) / 2, mid = (e[1] + e[0]) / 2;
            for (Eigen::Index k = 0; k < panel.nodes.size(); ++k) {
                const double t = mid + half * panel.nodes(k);
                const double s = std::abs(xi - t);
                const double wk = half * panel.weights(k) * s * std::exp(-m.c3 * s);
                q = sys.bary.array() / (t - sys.nodes.array());
                row += (wk / q.sum()) * q.matrix().transpose();
            }
        }
        sys.matrix.row(i) += m.c2 * row;
    }
    return sys;
}

Eigen::VectorXcd solve_nystrom(const NystromSystem& sys, const Eigen::VectorXcd& rhs, double* condition) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
    const double cond = 1.0 / lu.rcond();
    if (condition) *condition = cond;
    if (!(cond <= 1e8)) {
        std::ostringstream os;
        os << "Nystrom system condition estimate " << cond << " exceeds 1e8";
        throw IllConditioned(os.str());
    }
    Eigen::MatrixXd R(rhs.size(), 2);
    R.col(0) = rhs.real();
    R.col(1) = rhs.imag();
    const Eigen::MatrixXd X = lu.solve(R);
    Eigen::VectorXcd u(rhs.size());
    u.real() = X.col(0);
    u.imag() = X.col(1);
    return u;
}

NystromSolution solve_integral_eq(const Measure& m, cplx w, int n) {
    if (m.sigma() >= oracle_sigma_limit())
        throw NotAdmissible("integral equation is only uniquely solvable for sigma < 2");
    const NystromSystem sys = build_nystrom(m, n);
    NystromSolution sol;
    sol.nodes = sys.nodes;
    sol.weights = sys.weights;
    sol.bary = sys.bary;
    sol.measure = m;
    sol.w = w;
    sol.certified = m.is_admissible();
    Eigen::VectorXcd rhs(n);
    for (int j = 0; j < n; ++j) rhs(j) = std::exp(cplx(0, -2 * pi) * w * sys.nodes(j));
    sol.u_values = solve_nystrom(sys, rhs, &sol.condition_estimate);
    const Eigen::VectorXcd res = sys.matrix.cast<cplx>() * sol.u_values - rhs;
    sol.residual = res.norm() / rhs.norm();
    return sol;
}

cplx interpolate_u(const NystromSolution& sol, double xi) {
    if (std::abs(xi) > sol.measure.delta / 2) return 0;
    return bary_eval(sol.nodes, sol.bary, sol.u_values, xi);
}

cplx closed_form_u(const Measure& m, cplx w, double xi) {
    if (m.c3 != 0) throw InvalidRegime("closed_form_u needs c3 = 0");
    if (std::abs(xi) > m.delta / 2) return 0;
    if (m.c2 > 0 && std::abs(2 * m.c1 * pi * pi * w * w - m.c2) <= 1e-8 * m.c2)
        throw RemovablePoint("closed_form_u evaluated at w = ±(1/π)√(c2/(2c1))");
    const C3ZeroCoefficients co = c3zero_coefficients(m, w);
    return co.a * std::cos(co.kappa * xi) + co.b * std::sin(co.kappa * xi) +
           co.c * std::exp(cplx(0, -2 * pi) * w * xi);
}

cplx k_from_u(const NystromSolution& sol, cplx z) {
    cplx s = 0;
    for (Eigen::Index j = 0; j < sol.nodes.size(); ++j)
        s += sol.weights(j) * sol.u_values(j) * std::exp(cplx(0, 2 * pi) * sol.nodes(j) * z);
    return s;
}

cplx SincCombination::operator()(double delta, cplx x) const {
    cplx s = 0;
    for (const auto& [coef, t] : terms) s += coef * detail::sinc_shift(delta, x - t);
    return s;
}

double reproducing_residual(const Measure& m, cplx w, const SincCombination& f, int n) {
    // ∫ f k_w ν̂ dx = ∫_{-h}^{h} u_w(α) Φ(α) dα with Φ(α) = ∫ f(x) ν̂(x) e^{2πiαx} dx.
    // For f = sinc centred at t, Φ(α) = ∫_{|γ-α|<=h} e^{-2πi(γ-α)t} dν(γ).
    const NystromSolution sol = solve_integral_eq(m, w, n);
    const double h = m.delta / 2;
    cplx total = 0;
    for (Eigen::Index j = 0; j < sol.nodes.size(); ++j) {
        const double a = sol.nodes(j);
        cplx phi = 0;
        for (const auto& [coef, t] : f.terms) {
            auto dens = [&](double g) {
                return std::abs(g) * std::exp(-m.c3 * std::abs(g)) * std::exp(cplx(0, -2 * pi * (g - a) * t));
            };
            const cplx cont = m.c2 == 0 ? cplx(0) : integrate_adaptive_split(dens, a - h, a + h, {0.0}, 1e-14);
            phi += coef * (m.c1 * std::exp(cplx(0, 2 * pi * a * t)) + m.c2 * cont);
        }
        total += sol.weights(j) * sol.u_values(j) * phi;
    }
    return std::abs(total - f(m.delta, w));
}

double ode_residual(const Measure& m, const NystromSolution& sol) {
    if (m.c2 == 0) return 0;
    const double h = m.delta / 2, c1 = m.c1, c2 = m.c2, c3 = m.c3;
    const cplx w = sol.w;
    constexpr int M = 64;
    const Eigen::VectorXd y = lobatto_points<double>(M);
    Eigen::VectorXcd v(M + 1);
    for (int k = 0; k <= M; ++k) v(k) = interpolate_u(sol, h * y(k));
    Eigen::VectorXcd c0 = cheb_coeffs(v);
    cheb_chop(c0, 1e-13);
    std::vector<Eigen::VectorXcd> d{c0};
    for (int k = 1; k <= 4; ++k) d.push_back(cheb_derivative(d.back()) / h);
    auto U = [&](int k, double xi) { return cheb_eval(d[k], xi / h); };

    const double umax = v.cwiseAbs().maxCoeff();
    auto ref = [&](int k) { return c1 * umax / std::pow(h, k); };
    const cplx iw = cplx(0, -2 * pi) * w;  // derivative factor of e^{-2πiwξ}
    double worst = 0;
    auto record = [&](cplx resid, double scale) { worst = std::max(worst, std::abs(resid) / scale); };

    // interior
    for (Eigen::Index j = 0; j < sol.nodes.size(); ++j) {
        const double xi = sol.nodes(j);
        const cplx e = std::exp(iw * xi);
        if (c3 == 0) {
            const cplx t1 = c1 * U(2, xi), t2 = 2 * c2 * U(0, xi), f = iw * iw * e;
            record(t1 + t2 - f, std::abs(t1) + std::abs(t2) + std::abs(f) + ref(2));
        } else {
            const cplx t1 = c1 * U(4, xi), t2 = 2 * (c2 - c1 * c3 * c3) * U(2, xi),
                       t3 = (2 * c2 * c3 * c3 + c1 * std::pow(c3, 4)) * U(0, xi);
            const cplx f = std::pow(c3 * c3 - iw * iw, 2) * e;
            record(t1 + t2 + t3 - f, std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(f) + ref(4));
        }
    }

    // boundary conditions at ξ = 0: derivatives of the integral equation
    static const GaussRule<double> rule = gauss_legendre<double>(64);
    auto moment = [&](auto&& kern) {
        auto g = [&](double a) { return U(0, a) * kern(a); };
        return integrate(rule, g, -h, 0.0) + integrate(rule, g, 0.0, h);
    };
    auto sgn = [](double a) { return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0); };
    const cplx u0 = U(0, 0), u1 = U(1, 0), u2 = U(2, 0), u3 = U(3, 0);
    {
        const cplx i0 = c2 * moment([&](double a) { return std::abs(a) * std::exp(-c3 * std::abs(a)); });
        record(c1 * u0 + i0 - 1.0, std::abs(c1 * u0) + std::abs(i0) + 1.0);
    }
    {
        const cplx i1 = -c2 * moment([&](double a) { return sgn(a) * std::exp(-c3 * std::abs(a)) * (1 - c3 * std::abs(a)); });
        record(c1 * u1 + i1 - iw, std::abs(c1 * u1) + std::abs(i1) + std::abs(iw) + ref(1));
    }
    if (c3 > 0) {
        const cplx i2 = c2 * moment([&](double a) { return std::exp(-c3 * std::abs(a)) * (c3 * c3 * std::abs(a) - 2 * c3); });
        const cplx f2 = iw * iw;
        record(c1 * u2 + 2 * c2 * u0 + i2 - f2,
               std::abs(c1 * u2) + std::abs(2 * c2 * u0) + std::abs(i2) + std::abs(f2) + ref(2));
        const cplx i3 = -c2 * moment([&](double a) {
            return sgn(a) * std::exp(-c3 * std::abs(a)) * (3 * c3 * c3 - c3 * c3 * c3 * std::abs(a));
        });
        const cplx f3 = iw * iw * iw;
        record(c1 * u3 + 2 * c2 * u1 + i3 - f3,
               std::abs(c1 * u3) + std::abs(2 * c2 * u1) + std::abs(i3) + std::abs(f3) + ref(3));
    }
    if (w == cplx(0)) {
        record(u1, ref(1));
        if (c3 > 0) record(u3, ref(3));
    }
    return worst;
}

}  // namespace pairpack
