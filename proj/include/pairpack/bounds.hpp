#pragma once

#include "pairpack/measure.hpp"

#include <vector>

namespace pairpack {

/// Limiting constants only; the ε and o(1) terms of the asymptotic statements are not added.
/// Lower bounds use 1/K_ν(0,0) in place of C_ν, which is sound because s0 < 0.
struct BoundsReport {
    double c_nu_upper;    // 1/K_ν(0,0)
    double lower_thm1;    // 1 + s0 (1/K - 1)
    double lower_cor8;    // (1/2 + s0 (1/K - 1))_+ + 1/2
    double lower_thm2;    // 1/2
    double upper;         // same as c_nu_upper
    double best_lower;    // max(lower_thm1, lower_cor8)
    bool clamp_active;    // the (.)_+ in lower_cor8 bound
    Measure measure;
};

struct BoundPair {
    double lower;
    double upper;
};

struct S0 {
    double value;
    double argmin;
};

S0 s0_argmin();
double s0();

BoundsReport average_bounds(const Measure& m, Gate gate = Gate::Standard);

BoundPair selberg_bounds(int degree);
BoundPair dedekind_bounds(int n);

/// (1 + s0(1/K - 1), 1/K) for the measure (1, 1, 4c, 1/2).
BoundPair reim_zeta_bounds(double c);

struct Figure1Row {
    double c, lower, upper;
};

std::vector<Figure1Row> figure1_data(double c_min, double c_max, int steps);

/// (1/(2ℓ)) e^{-4cb} (1 - e^{-4cℓ})/(4c), continuous at c = 0.
double gonek_ki_conjectured_average(double b, double ell, double c);

enum class ThresholdStatus { Crossing, AlreadyBelow };

struct RefutationThreshold {
    double ell;
    ThresholdStatus status;
};

/// Smallest ℓ with conjectured average <= floor, by bisection to 1e-6.
/// AlreadyBelow (ell = 0) when the ℓ -> 0 limit e^{-4cb}/2 is already at or under the floor.
RefutationThreshold refutation_threshold(double c, double b, double floor = 0.5);

}  // namespace pairpack
