#include "pairpack/kernel.hpp"

#include "special.hpp"

#include <cmath>
#include <utility>

namespace pairpack {

using detail::pi;

const char* to_string(RootCase c) {
    switch (c) {
        case RootCase::PurelyImaginary: return "PurelyImaginary";
        case RootCase::ConjugateQuadrant: return "ConjugateQuadrant";
        case RootCase::Degenerate: return "Degenerate";
    }
    return "?";
}

const char* to_string(LimitPath p) {
    switch (p) {
        case LimitPath::None: return "None";
        case LimitPath::RemovableW: return "RemovableW";
        case LimitPath::RemovableZ: return "RemovableZ";
        case LimitPath::DegenerateEta: return "DegenerateEta";
    }
    return "?";
}

namespace {

// A root together with η - c3 and η² - c3², both free of cancellation.
struct Root {
    cplx eta, shift, d;
};

Root generic_root(const Measure& m, cplx eta) {
    return {eta, eta - m.c3, eta * eta - m.c3 * m.c3};
}

struct RootPair {
    Root r1, r2;
    EtaPair pair;
};

RootPair compute_roots(const Measure& m) {
    if (m.c3 == 0) throw InvalidRegime("quartic roots need c3 > 0; use the c3 = 0 kernel");
    if (m.c2 == 0) throw InvalidRegime("quartic roots need c2 > 0");
    const double lam = m.c2 / m.c1, c3 = m.c3, c3sq = c3 * c3;
    const double sl = std::sqrt(lam);
    const bool real_branch = lam >= 4 * c3sq;
    const cplx Lam = real_branch ? cplx(std::sqrt(lam - 4 * c3sq), 0) : cplx(0, std::sqrt(4 * c3sq - lam));
    const cplx slL = sl * Lam;
    // (-λ + √λΛ)(-λ - √λΛ) = 4λc3², so the "+" difference is formed as a quotient
    const cplx d1 = -4 * lam * c3sq / (lam + slL);
    const cplx d2 = -lam - slL;

    RootPair out;
    EtaPair& ep = out.pair;
    const double e1sq_abs = std::abs(c3sq + d1), e2sq_abs = std::abs(c3sq + d2);
    if (2 * std::abs(slL) <= 1e-9 * (e1sq_abs + e2sq_abs)) {
        const double dd = -lam;
        const cplx eta(0, std::sqrt(lam - c3sq));
        Root r{eta, dd / (eta + c3), dd};
        out.r1 = out.r2 = r;
        ep.degenerate = true;
        ep.case_tag = RootCase::Degenerate;
    } else if (real_branch) {
        const double e2sq = c3sq + d2.real();
        const double e1sq = c3sq * (2 * lam + c3sq) / e2sq;
        const cplx eta1(0, std::sqrt(-e1sq)), eta2(0, std::sqrt(-e2sq));
        out.r1 = {eta1, d1 / (eta1 + c3), d1};
        out.r2 = {eta2, d2 / (eta2 + c3), d2};
        ep.case_tag = RootCase::PurelyImaginary;
    } else {
        const cplx eta1 = std::sqrt(c3sq + d1);
        out.r1 = {eta1, d1 / (eta1 + c3), d1};
        out.r2 = {std::conj(eta1), std::conj(out.r1.shift), std::conj(d1)};
        ep.case_tag = RootCase::ConjugateQuadrant;
    }
    ep.eta1 = out.r1.eta;
    ep.eta2 = out.r2.eta;
    ep.shift1 = out.r1.shift;
    ep.shift2 = out.r2.shift;
    return out;
}

double lam_of(const Measure& m) { return m.c2 / m.c1; }

cplx A_of(const Measure& m, const Root& r) {
    const double h = m.delta / 2;
    return 1.0 + lam_of(m) * (detail::J(1, r.shift, h) + detail::J(1, -r.eta - m.c3, h));
}

cplx B_of(const Measure& m, const Root& r) {
    const double h = m.delta / 2, lam = lam_of(m);
    return r.d + 2 * lam - 2 * lam * m.c3 * (detail::J(0, r.shift, h) + detail::J(0, -r.eta - m.c3, h));
}

cplx Ap_of(const Measure& m, const Root& r) {
    const double h = m.delta / 2;
    return lam_of(m) * (detail::J(2, r.shift, h) - detail::J(2, -r.eta - m.c3, h));
}

cplx Bp_of(const Measure& m, const Root& r) {
    const double h = m.delta / 2, lam = lam_of(m);
    return 2.0 * r.eta - 2 * lam * m.c3 * (detail::J(1, r.shift, h) - detail::J(1, -r.eta - m.c3, h));
}

// e^{-g} C(η, z)
cplx C_scaled(double h, cplx eta, cplx z, double g) {
    const cplx t = cplx(0, 2 * pi) * z;
    return h * (detail::shc_scaled((eta + t) * h, g) + detail::shc_scaled((-eta + t) * h, g));
}

cplx Cd_scaled(double h, cplx eta, cplx z, double g) {
    const cplx t = cplx(0, 2 * pi) * z;
    return h * h * (detail::dshc_scaled((eta + t) * h, g) - detail::dshc_scaled((-eta + t) * h, g));
}

KernelEvaluation k0z_impl(const Measure& m, cplx z, Gate gate, bool swap) {
    if (m.c3 == 0) throw InvalidRegime("kernel_k0z needs c3 > 0; use kernel_c3zero");
    const KernelRow0 row(m, gate, swap);
    KernelEvaluation ev;
    ev.at_w = 0;
    ev.at_z = z;
    ev.value = row(z);
    if (row.degenerate()) ev.limit_path = LimitPath::DegenerateEta;
    return ev;
}

// k_w(z) = ∫ u_w(α) e^{2πiαz} dα, holomorphic in both w and z.
cplx k_w_direct(const Measure& m, cplx w, cplx z) {
    const double h = m.delta / 2;
    const C3ZeroCoefficients co = c3zero_coefficients(m, w);
    const cplx t = cplx(0, 2 * pi) * z;
    const cplx ik(0, co.kappa);
    const cplx sp = detail::shc_scaled((ik + t) * h, 0), sm = detail::shc_scaled((-ik + t) * h, 0);
    const cplx q = h * (sp + sm);
    const cplx r = cplx(0, -h) * (sp - sm);
    return co.a * q + co.b * r + co.c * detail::sinc_shift(m.delta, z - w);
}

}  // namespace

KernelRow0::KernelRow0(const Measure& m, Gate gate, bool swap_roots) : m_(m) {
    require_admissible(m, gate);
    if (m.c3 == 0) {
        kappa_ = std::sqrt(2 * m.c2 / m.c1);
        const double sD = kappa_ / 2 * m.delta;
        a0_ = 2 / (m.c1 * (2 * std::cos(sD) + kappa_ * m.delta * std::sin(sD)));
        return;
    }
    mu_ = mu(m);
    if (m.c2 == 0) return;
    const double h = m.delta / 2, lam = lam_of(m);
    // p = 1/c1 - A(0)μ and r = c3²/c1 + B(0)μ, both with the factor e^{-c3 h} removed
    p_ = 2 * lam * (1 + m.c3 * h) / (2 * m.c2 + m.c3 * m.c3 * m.c1);
    r_ = 4 * lam * mu_;
    RootPair rp = compute_roots(m);
    if (swap_roots) std::swap(rp.r1, rp.r2);
    eta1_ = rp.r1.eta;
    eta2_ = rp.r2.eta;
    degenerate_ = rp.pair.degenerate;
    const cplx A1 = A_of(m, rp.r1), B1 = B_of(m, rp.r1);
    if (degenerate_) {
        const cplx Ap = Ap_of(m, rp.r1), Bp = Bp_of(m, rp.r1);
        const cplx den = A1 * Bp - Ap * B1;
        coef1_ = (p_ * Bp + r_ * Ap) / den;
        coef2_ = -(p_ * B1 + r_ * A1) / den;
    } else {
        const cplx A2 = A_of(m, rp.r2), B2 = B_of(m, rp.r2);
        const cplx L = A1 * B2 - B1 * A2;
        coef1_ = (p_ * B2 + r_ * A2) / L;
        coef2_ = -(p_ * B1 + r_ * A1) / L;
    }
}

cplx KernelRow0::operator()(cplx z) const {
    const double h = m_.delta / 2;
    if (m_.c3 == 0) {
        const cplx t = cplx(0, 2 * pi) * z, ik(0, kappa_);
        return a0_ * h * (detail::shc_scaled((ik + t) * h, 0) + detail::shc_scaled((-ik + t) * h, 0));
    }
    const cplx sinc = mu_ * detail::sinc_shift(m_.delta, z);
    if (m_.c2 == 0) return sinc;
    const double g = m_.c3 * h;
    if (degenerate_) return coef1_ * C_scaled(h, eta1_, z, g) + coef2_ * Cd_scaled(h, eta1_, z, g) + sinc;
    return coef1_ * C_scaled(h, eta1_, z, g) + coef2_ * C_scaled(h, eta2_, z, g) + sinc;
}

EtaPair quartic_roots(const Measure& m) { return compute_roots(m).pair; }

cplx aux_A(const Measure& m, cplx eta) { return A_of(m, generic_root(m, eta)); }
cplx aux_B(const Measure& m, cplx eta) { return B_of(m, generic_root(m, eta)); }
cplx aux_A_prime(const Measure& m, cplx eta) { return Ap_of(m, generic_root(m, eta)); }
cplx aux_B_prime(const Measure& m, cplx eta) { return Bp_of(m, generic_root(m, eta)); }

cplx aux_C(const Measure& m, cplx eta, cplx z) { return C_scaled(m.delta / 2, eta, z, 0); }
cplx aux_C_deta(const Measure& m, cplx eta, cplx z) { return Cd_scaled(m.delta / 2, eta, z, 0); }

double mu(const Measure& m) {
    if (m.c2 == 0 && m.c3 == 0) throw InvalidRegime("mu needs c2 > 0 or c3 > 0");
    return m.c3 * m.c3 / (2 * m.c2 + m.c3 * m.c3 * m.c1);
}

double kernel_k00(const Measure& m, Gate gate) {
    if (m.c3 > 0) return k0z_impl(m, 0, gate, false).value.real();
    require_admissible(m, gate);
    const double x = std::sqrt(m.c2 / (2 * m.c1)) * m.delta;
    const double sx = x < 1e-4 ? 1 - x * x / 6 : std::sin(x) / x;
    return m.delta / m.c1 * sx / (std::cos(x) + x * std::sin(x));
}

KernelEvaluation kernel_k0z(const Measure& m, cplx z, Gate gate) { return k0z_impl(m, z, gate, false); }

KernelEvaluation kernel_k0z_swapped(const Measure& m, cplx z, Gate gate) {
    return k0z_impl(m, z, gate, true);
}

double removable_w(const Measure& m) { return std::sqrt(m.c2 / (2 * m.c1)) / pi; }

C3ZeroCoefficients c3zero_coefficients(const Measure& m, cplx w) {
    C3ZeroCoefficients co;
    co.kappa = std::sqrt(2 * m.c2 / m.c1);
    if (m.c2 == 0) {
        co.a = co.b = 0;
        co.c = 1 / m.c1;
        return co;
    }
    const double s = co.kappa / 2, D = m.delta;
    const cplx den = 2 * m.c1 * pi * pi * w * w - m.c2;
    const cplx pw = pi * D * w;
    co.a = -2 * m.c2 * (std::cos(pw) + pw * std::sin(pw)) /
           (m.c1 * den * (2 * std::cos(s * D) + co.kappa * D * std::sin(s * D)));
    co.b = cplx(0, co.kappa) * pi * w * std::cos(pw) / (den * std::cos(s * D));
    co.c = 2 * pi * pi * w * w / den;
    return co;
}

KernelEvaluation kernel_c3zero(const Measure& m, cplx w, cplx z, Gate gate) {
    if (m.c3 != 0) throw InvalidRegime("kernel_c3zero needs c3 = 0");
    require_admissible(m, gate);
    KernelEvaluation ev;
    ev.at_w = w;
    ev.at_z = z;
    const cplx zc = std::conj(z);
    const double w0 = removable_w(m);
    if (m.c2 > 0 && (std::abs(w - w0) <= 1e-3 * w0 || std::abs(w + w0) <= 1e-3 * w0)) {
        // k_w(z) is entire in w: average it over a circle that stays clear of the pole
        constexpr int N = 16;
        const double rho = 1e-2 * w0;
        cplx acc = 0;
        for (int j = 0; j < N; ++j) {
            const double th = 2 * pi * (j + 0.5) / N;
            acc += k_w_direct(m, w + rho * cplx(std::cos(th), std::sin(th)), zc);
        }
        ev.value = std::conj(acc / double(N));
        ev.limit_path = LimitPath::RemovableW;
        return ev;
    }
    ev.value = std::conj(k_w_direct(m, w, zc));
    return ev;
}

double script_L_sigma_limit() { return 2.9; }

cplx script_L(const Measure& m) {
    if (m.c3 == 0) throw InvalidRegime("script_L needs c3 > 0");
    if (m.c2 == 0) throw InvalidRegime("script_L needs c2 > 0");
    if (m.sigma() > script_L_sigma_limit())
        throw NotAdmissible("script_L is only certified for sigma <= 2.9");
    const RootPair rp = compute_roots(m);
    if (rp.pair.degenerate) throw DegenerateRoots("script_L undefined at lambda = 4 c3^2");
    return A_of(m, rp.r1) * B_of(m, rp.r2) - B_of(m, rp.r1) * A_of(m, rp.r2);
}

}  // namespace pairpack
