#pragma once

#include "pairpack/measure.hpp"

#include <complex>

namespace pairpack {

using cplx = std::complex<double>;

enum class RootCase { PurelyImaginary, ConjugateQuadrant, Degenerate };

/// Roots of η^4 + 2(λ - c3^2)η^2 + c3^2(2λ + c3^2) = 0 with Re η >= 0, λ = c2/c1.
/// eta1 carries the "+" branch c3^2 - λ + √λ·Λ.
struct EtaPair {
    cplx eta1;
    cplx eta2;
    bool degenerate = false;
    RootCase case_tag = RootCase::PurelyImaginary;
    // η - c3, computed without cancellation; used by the auxiliary integrals
    cplx shift1;
    cplx shift2;
};

enum class LimitPath { None, RemovableW, RemovableZ, DegenerateEta };

struct KernelEvaluation {
    cplx value;
    cplx at_w;
    cplx at_z;
    LimitPath limit_path = LimitPath::None;
};

const char* to_string(RootCase c);
const char* to_string(LimitPath p);

EtaPair quartic_roots(const Measure& m);

/// A(η) = 1 + (c2/c1) ∫_{-Δ/2}^{Δ/2} cosh(ηα)|α| e^{-c3|α|} dα
cplx aux_A(const Measure& m, cplx eta);

/// B(η) = η^2 + 2c2/c1 - c3^2 - 2(c2 c3/c1) ∫_{-Δ/2}^{Δ/2} cosh(ηα) e^{-c3|α|} dα
cplx aux_B(const Measure& m, cplx eta);

/// dA/dη and dB/dη, differentiated under the integral sign.
cplx aux_A_prime(const Measure& m, cplx eta);
cplx aux_B_prime(const Measure& m, cplx eta);

/// C(η, z) = ∫_{-Δ/2}^{Δ/2} cosh(ηα) e^{2πiαz} dα
cplx aux_C(const Measure& m, cplx eta, cplx z);
cplx aux_C_deta(const Measure& m, cplx eta, cplx z);

double mu(const Measure& m);

/// K_ν(0, 0). Dispatches on c3 = 0 vs c3 > 0.
double kernel_k00(const Measure& m, Gate gate = Gate::Standard);

/// Full K_ν(w, z) for c3 = 0; holomorphic in z, anti-holomorphic in w.
KernelEvaluation kernel_c3zero(const Measure& m, cplx w, cplx z, Gate gate = Gate::Standard);

/// K_ν(0, z) for c3 > 0.
KernelEvaluation kernel_k0z(const Measure& m, cplx z, Gate gate = Gate::Standard);

/// Same, with η1 and η2 exchanged; the value must not change.
KernelEvaluation kernel_k0z_swapped(const Measure& m, cplx z, Gate gate = Gate::Standard);

/// z ↦ K_ν(0, z) for any c3 >= 0, with the z-independent parts computed once.
class KernelRow0 {
public:
    explicit KernelRow0(const Measure& m, Gate gate = Gate::Standard, bool swap_roots = false);
    cplx operator()(cplx z) const;
    bool degenerate() const { return degenerate_; }

private:
    Measure m_;
    bool degenerate_ = false;
    double mu_ = 0, p_ = 0, r_ = 0;
    cplx eta1_, eta2_;
    // c3 > 0: coefficients of C(η1,z) and C(η2,z) (or C and ∂C/∂η when degenerate)
    cplx coef1_, coef2_;
    // c3 = 0: u_0 = a cos(κξ)
    double a0_ = 0, kappa_ = 0;
};

/// A(η1)B(η2) - B(η1)A(η2). Refuses sigma > 2.9 and degenerate roots.
cplx script_L(const Measure& m);

double script_L_sigma_limit();  // 2.9

/// Coefficients of u_w = a cos(κξ) + b sin(κξ) + c e^{-2πiwξ}, κ = √(2c2/c1), for c3 = 0.
struct C3ZeroCoefficients {
    cplx a, b, c;
    double kappa;
};

C3ZeroCoefficients c3zero_coefficients(const Measure& m, cplx w);

/// Zeros of 2c1π²w² - c2 (only the positive one; the other is its negative).
double removable_w(const Measure& m);

}  // namespace pairpack
