#pragma once

#include "pairpack/kernel.hpp"
#include "pairpack/measure.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace pairpack {

/// Discretization of c1 u(ξ) + c2 ∫ u(α)|ξ-α| e^{-c3|ξ-α|} dα = f(ξ) on [-Δ/2, Δ/2].
struct NystromSystem {
    Eigen::VectorXd nodes;        // Gauss–Legendre abscissae, ascending
    Eigen::VectorXd weights;
    Eigen::VectorXd bary;         // barycentric interpolation weights for the nodes
    Eigen::MatrixXd matrix;
    Measure measure;
};

struct NystromSolution {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    Eigen::VectorXd bary;
    Eigen::VectorXcd u_values;
    Measure measure;
    cplx w;
    double condition_estimate = 0;
    double residual = 0;          // ||M u - f|| / ||f||
    bool certified = true;        // false when sigma lies in (5/3, 2): solvable, kernel reading uncertified
};

/// sigma limit beyond which the integral operator is no longer a contraction.
double oracle_sigma_limit();  // 2

NystromSystem build_nystrom(const Measure& m, int n);

NystromSolution solve_integral_eq(const Measure& m, cplx w, int n = 200);

/// Solves the discrete system for an arbitrary right-hand side sampled at the nodes.
Eigen::VectorXcd solve_nystrom(const NystromSystem& sys, const Eigen::VectorXcd& rhs,
                               double* condition = nullptr);

/// u interpolated from the nodes to an arbitrary ξ in [-Δ/2, Δ/2].
cplx interpolate_u(const NystromSolution& sol, double xi);

/// Closed-form u_w for c3 = 0; zero outside [-Δ/2, Δ/2].
cplx closed_form_u(const Measure& m, cplx w, double xi);

/// k_w(z) = ∫ u_w(α) e^{2πiαz} dα by the solution's quadrature.
cplx k_from_u(const NystromSolution& sol, cplx z);

/// Finite combination Σ coef · sin(πΔ(x - t))/(π(x - t)).
struct SincCombination {
    std::vector<std::pair<double, double>> terms;  // (coef, center t)
    cplx operator()(double delta, cplx x) const;
};

/// |∫ f k_w ν̂ dx - f(w)| with k_w taken from the Nyström solution.
double reproducing_residual(const Measure& m, cplx w, const SincCombination& f, int n = 200);

/// Largest normalized residual of the ODE and of its boundary conditions at ξ = 0.
double ode_residual(const Measure& m, const NystromSolution& sol);

}  // namespace pairpack
