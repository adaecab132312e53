#pragma once

#include "pairpack/measure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pairpack {

enum class Window { ZeroToT, TToTwoT, SymmetricT };

const char* to_string(Window w);
Window window_from_string(const std::string& s);

struct ZeroDataset {
    std::vector<double> ordinates;   // non-decreasing; repeats carry multiplicity
    double lambda = 1;
    Window window = Window::ZeroToT;
    std::string source;
    std::vector<std::string> warnings;
};

/// One ordinate per line; blank lines and '#' lines skipped; "# lambda=<v>" supplies λ
/// when none is passed.
ZeroDataset load_zeros(const std::string& path, std::optional<double> lambda = std::nullopt,
                       Window window = Window::ZeroToT);

ZeroDataset make_dataset(std::vector<double> ordinates, double lambda, Window window = Window::ZeroToT,
                         std::string source = "memory");

/// Ordinates of ds inside the window for T. Throws EmptyWindow.
std::vector<double> window_ordinates(const ZeroDataset& ds, double T);

/// (λT/2π) log T
double form_factor_normalizer(const ZeroDataset& ds, double T);

double pair_weight(double u);  // 4/(4 + u²)

/// Direct double sum over the window, deterministic for any thread count.
double form_factor(const ZeroDataset& ds, double T, double alpha);

std::vector<double> form_factor_grid(const ZeroDataset& ds, double T, const std::vector<double>& alphas);

/// 2π ∫_{-U}^{U} e^{-4π|u|} |Σ T^{iλαγ} e^{2πiγu}|² du, normalized like form_factor.
double form_factor_positive(const ZeroDataset& ds, double T, double alpha, double u_cutoff = 10);

struct WindowedAverage {
    double value;
    double grid_step;   // the step actually used (ell divided into whole steps)
};

/// (1/ℓ) ∫_b^{b+ℓ} F(α, T) dα by the trapezoid rule.
WindowedAverage windowed_average(const ZeroDataset& ds, double T, double b, double ell, double grid_step);

/// (1/2β) ∫_{-β}^{β} F(α, T) dα by the trapezoid rule.
WindowedAverage symmetric_average(const ZeroDataset& ds, double T, double beta, double grid_step);

/// c1 ĝ(0) + c2 ∫_{-Δ}^{Δ} ĝ(α)|α|e^{-c3|α|} dα, with ĝ linear between samples.
double phi_functional(const Measure& m, const std::vector<double>& g_hat, const std::vector<double>& grid);

/// Φ_ν(g)/g(0) for g = |K_ν(0,·)|², via ∫ g ν̂ dx on the real line. Equals 1/K_ν(0,0).
double ep1_ratio_check(const Measure& m, Gate gate = Gate::Standard);

/// Fejér witness g(x) = β (sin πβx/(πβx))², ĝ(α) = (1 - |α|/β)_+.
struct FejerReport {
    double g0;                // g(0), equals β
    bool admissible;          // ĝ <= 1 on [-β, β], ĝ = 0 outside, g >= 0 on the sample grid
    double lattice_partial;   // Σ_{|n|<=N} g(n)
    double tail_estimate;     // Σ_{|n|>N} g(n), averaged sin² replaced by 1/2
    double tail_bound;        // bound on |true tail - tail_estimate|
    double fourier_side;      // Σ_k ĝ(k)
};

FejerReport fejer_report(double beta, long N = 100000);
double fejer_check(double beta);

/// Threads used by the pair sums: hardware concurrency capped by PAIRPACK_THREADS.
unsigned worker_threads();

}  // namespace pairpack
