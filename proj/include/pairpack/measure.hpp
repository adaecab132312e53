#pragma once

#include "pairpack/errors.hpp"

namespace pairpack {

/// Which sigma threshold certifies the RKHS construction.
enum class Gate { Standard, Extended };

/// dν = c1 δ + c2 |α| e^{-c3 |α|} dα on [-Δ, Δ].
struct Measure {
    double c1 = 1, c2 = 0, c3 = 0, delta = 1;

    Measure() = default;
    Measure(double c1_, double c2_, double c3_, double delta_);

    double sigma() const { return c2 / c1 * delta * delta; }
    bool is_admissible() const;
    bool is_extended_admissible() const;
    bool passes(Gate g) const { return g == Gate::Standard ? is_admissible() : is_extended_admissible(); }
};

struct NormEquivalence {
    double a_sq;
    double b_sq;
};

struct SupG {
    double value;
    double argmax;
};

double g_surface(double sigma_var, double t);

/// sup_{t>0} (2 - 2cos t - 2t sin t)/t^2 and where it is attained.
SupG sup_g_argmax();
double sup_g();

double standard_threshold();   // 5/3
double extended_threshold();   // 1/sup_g

double nu_hat(const Measure& m, double x);

/// Throws NotAdmissible beyond the extended threshold.
NormEquivalence norm_bounds(const Measure& m);

/// Throws NotAdmissible when m fails the gate.
void require_admissible(const Measure& m, Gate gate = Gate::Standard);

}  // namespace pairpack
