#include "pairpack/verify.hpp"

#include "pairpack/bounds.hpp"
#include "pairpack/format.hpp"
#include "pairpack/formfactor.hpp"
#include "pairpack/fredholm.hpp"
#include "pairpack/kernel.hpp"
#include "pairpack/measure.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace pairpack {

namespace {

constexpr double kPi = 3.14159265358979323846;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double a, double b) { return a + (b - a) * unit_from_bits(eng_()); }

private:
    std::mt19937_64 eng_;
};

struct Ctx {
    std::vector<CheckResult>& out;
    std::string suite;

    void le(const std::string& name, double measured, double tol) {
        out.push_back({suite, name, measured <= tol, measured, tol});
    }
    void holds(const std::string& name, bool ok) { out.push_back({suite, name, ok, ok ? 0.0 : 1.0, 0.0}); }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Measure random_c3zero(Rng& r) {
    const double c1 = r.uniform(0.5, 2), delta = r.uniform(0.2, 1.5), sigma = r.uniform(0.01, 5.0 / 3);
    return Measure(c1, sigma * c1 / (delta * delta), 0, delta);
}

void suite_constants(Ctx& c) {
    const S0 s = s0_argmin();
    c.le("s0 vs -0.217233", std::abs(s.value + 0.217233), 1e-6);
    c.le("s0 first-order condition tan x = x", std::abs(std::tan(s.argmin) - s.argmin), 1e-10);
    const SupG g = sup_g_argmax();
    c.le("sup_g vs 0.586", std::abs(g.value - 0.5865), 1e-3);
    c.le("sup_g reproduced at argmax", std::abs(g_surface(0, g.argmax) - g.value), 1e-9);
    c.holds("sup_g dominates t = pi", g.value >= g_surface(0, kPi));
    const BoundPair b = reim_zeta_bounds(0);
    c.le("reim lower vs 0.7467", std::abs(b.lower - 0.7467), 5e-4);
    c.le("reim upper vs 2.1659", std::abs(b.upper - 2.1659), 5e-4);
    const Measure m(1, 1, 0, 0.5);
    const NystromSolution sol = solve_integral_eq(m, 0, 200);
    c.le("K(0,0) closed form vs Nystrom", std::abs(kernel_k00(m) - k_from_u(sol, 0).real()), 1e-7);
}

void suite_kernels(Ctx& c) {
    Rng rng(0x6b65726e656c73ULL);
    double worst = 0;
    for (double c3 : {0.1, 0.5, 1.0, 4.0, 10.0}) {
        const Measure m(1, 1, c3, 0.5);
        const NystromSolution sol = solve_integral_eq(m, 0, 200);
        for (cplx z : {cplx(0), cplx(0.3), cplx(1, 0.5)})
            worst = std::max(worst, std::abs(kernel_k0z(m, z).value - std::conj(k_from_u(sol, std::conj(z)))));
    }
    c.le("K(0,z) closed form vs Nystrom, c3 in {0.1,0.5,1,4,10}", worst, 1e-6);

    worst = 0;
    for (double c3 : {0.1, 1.0, 4.0})
        for (cplx z : {cplx(0), cplx(0.7), cplx(0.2, -0.4)}) {
            const Measure m(1.3, 0.8, c3, 0.9);
            worst = std::max(worst, rel(kernel_k0z_swapped(m, z).value, kernel_k0z(m, z).value));
        }
    c.le("K(0,z) invariant under eta1 <-> eta2", worst, 1e-12);

    worst = 0;
    for (int i = 0; i < 20; ++i) {
        const Measure m(1, 1, rng.uniform(0.05, 8), 0.5);
        const cplx z(rng.uniform(-3, 3), rng.uniform(-1, 1));
        worst = std::max(worst, rel(kernel_k0z(m, z).value, kernel_k0z(m, -z).value));
    }
    c.le("K(0,z) even in z", worst, 1e-12);

    worst = 0;
    double herm = 0;
    for (int i = 0; i < 20; ++i) {
        const Measure m = random_c3zero(rng);
        const cplx w(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5)), z(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5));
        const cplx k = kernel_c3zero(m, w, z).value;
        herm = std::max(herm, rel(k, std::conj(kernel_c3zero(m, z, w).value)));
        const NystromSolution sol = solve_integral_eq(m, w, 200);
        worst = std::max(worst, rel(k, std::conj(k_from_u(sol, std::conj(z)))));
    }
    c.le("K(w,z) c3=0 Hermitian symmetry", herm, 1e-10);
    c.le("K(w,z) c3=0 closed form vs Nystrom", worst, 1e-8);

    {
        const Measure m(1, 1, 0, 0.5);
        const double w0 = removable_w(m);
        const KernelEvaluation at = kernel_c3zero(m, w0, 0.4);
        const KernelEvaluation near = kernel_c3zero(m, w0 + 1e-6, 0.4);
        const NystromSolution sol = solve_integral_eq(m, w0, 200);
        c.holds("removable w takes the limit branch", at.limit_path == LimitPath::RemovableW);
        c.le("removable w limit vs w0 + 1e-6", std::abs(at.value - near.value), 1e-6);
        c.le("removable w limit vs Nystrom", std::abs(at.value - std::conj(k_from_u(sol, 0.4))), 1e-8);
    }

    {
        const double k0 = kernel_k00(Measure(1, 1, 0, 0.5));
        double prev = 1e300;
        bool mono = true;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const double gap = std::abs(kernel_k00(Measure(1, 1, eps, 0.5)) - k0);
            mono = mono && gap < prev;
            prev = gap;
        }
        c.holds("K(0,0) continuous as c3 -> 0 (monotone gaps)", mono);
    }

    {
        const Measure deg(1, 1, 0.5, 0.5);
        const double kd = kernel_k00(deg);
        const double lo = kernel_k00(Measure(1, 1 - 1e-6, 0.5, 0.5)), hi = kernel_k00(Measure(1, 1 + 1e-6, 0.5, 0.5));
        const double gap = std::max({0.0, std::min(lo, hi) - kd, kd - std::max(lo, hi)});
        c.le("degenerate branch bracketed by lambda(1 +- 1e-6)", gap, 1e-5);
        const NystromSolution sol = solve_integral_eq(deg, 0, 200);
        c.le("degenerate branch vs Nystrom", std::abs(kd - k_from_u(sol, 0).real()), 1e-7);
    }

    {
        double e = 0;
        for (int m = 1; m <= 20; ++m) {
            const double inv = 1 / kernel_k00(Measure(1, 1, 0, 1.0 / m));
            const double formula = 1 / (std::sqrt(2.0) * std::tan(1 / (std::sqrt(2.0) * m))) + 1.0 / (2 * m);
            e = std::max(e, std::abs(inv - formula));
        }
        c.le("1/K(0,0) = cot form for Delta = 1/m", e, 1e-12);
    }

    {
        std::vector<double> gaps;
        for (double c3 : {10.0, 100.0, 1000.0}) gaps.push_back(std::abs(1 / kernel_k00(Measure(1, 1, c3, 0.5)) - 2));
        const double slope = (std::log(gaps[2]) - std::log(gaps[0])) / (std::log(1000.0) - std::log(10.0));
        c.le("|1/K - 2| log-log slope in c3", slope, -0.9);
    }

    {
        double res = 0;
        for (double c3 : {0.1, 0.5, 1.0, 3.0}) {
            const Measure m(1, 1, c3, 0.5);
            const EtaPair ep = quartic_roots(m);
            const double lam = 1;
            for (cplx e : {ep.eta1, ep.eta2}) {
                const cplx e2 = e * e;
                const cplx q = e2 * e2 + 2 * (lam - c3 * c3) * e2 + c3 * c3 * (2 * lam + c3 * c3);
                res = std::max(res, std::abs(q) / std::max(1.0, std::norm(e2)));
            }
        }
        c.le("quartic residual", res, 1e-10);
    }
}

void suite_appendix(Ctx& c) {
    int bad = 0, total = 0;
    const double lr0 = std::log(0.05), lr1 = std::log(20.0);
    for (int i = 1; i <= 40; ++i) {
        const double sigma = 2.9 * i / 40;
        for (int j = 0; j < 40; ++j) {
            const double r = std::exp(lr0 + (j + 0.5) * (lr1 - lr0) / 40);
            const Measure m(1, sigma, r * std::sqrt(sigma) / 2, 1);
            const cplx L = script_L(m);
            ++total;
            const bool ok = r < 1 ? (L.real() < 0 && std::abs(L.imag()) <= 1e-10 * std::abs(L))
                                  : (L.imag() < 0 && std::abs(L.real()) <= 1e-10 * std::abs(L));
            if (!ok || !(std::abs(L) > 0)) ++bad;
        }
    }
    c.le("script L signs over 40x40 grid (failures)", bad, 0);
    c.holds("grid size 1600", total == 1600);
}

void suite_oracle(Ctx& c) {
    Rng rng(0x6f7261636c65ULL);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        const Measure m = random_c3zero(rng);
        const cplx w(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5));
        const NystromSolution sol = solve_integral_eq(m, w, 256);
        for (Eigen::Index j = 0; j < sol.nodes.size(); ++j)
            worst = std::max(worst, std::abs(sol.u_values(j) - closed_form_u(m, w, sol.nodes(j))));
    }
    c.le("Nystrom u vs closed form (c3 = 0)", worst, 1e-8);

    {
        const Measure m(1, 1, 1, 0.5);
        const NystromSolution a = solve_integral_eq(m, 0.7, 200), b = solve_integral_eq(m, 0.7, 400);
        double d = 0;
        for (double xi : {-0.2, -0.05, 0.1, 0.24}) d = std::max(d, std::abs(interpolate_u(a, xi) - interpolate_u(b, xi)));
        c.le("self-convergence n = 200 -> 400", d, 1e-10);
        c.le("linear-system residual", std::max(a.residual, b.residual), 1e-12);
    }

    {
        const NystromSystem sys = build_nystrom(Measure(1, 1.5, 0.3, 1), 96);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix);
        const double smin = svd.singularValues().minCoeff();
        const Eigen::VectorXcd u = solve_nystrom(sys, Eigen::VectorXcd::Zero(96));
        c.holds("homogeneous system is nonsingular", smin > 1e-3);
        c.le("homogeneous solution norm", u.norm(), 1e-10);
    }

    {
        const NystromSolution sol = solve_integral_eq(Measure(1, 1, 0.7, 0.5), 0, 200);
        double asym = 0;
        const Eigen::Index n = sol.nodes.size();
        for (Eigen::Index j = 0; j < n; ++j)
            asym = std::max({asym, std::abs(sol.u_values(j).imag()), std::abs(sol.u_values(j) - sol.u_values(n - 1 - j))});
        c.le("w = 0 solution real and even", asym, 1e-10);
    }

    struct Rep {
        Measure m;
        cplx w;
        double centre;
        double tol;
    };
    const Rep reps[] = {{Measure(1, 1, 0, 0.5), 0, 0, 1e-6},
                        {Measure(1, 1, 0, 0.5), cplx(1, 0.2), 2.5, 1e-6},
                        {Measure(1, 1, 1, 0.5), 0.3, -0.8, 1e-6},
                        {Measure(1, 0, 0, 0.5), 0.4, 1.0, 1e-10}};
    for (const auto& r : reps) {
        SincCombination f;
        f.terms = {{1.0, r.centre}};
        c.le("reproducing residual c3=" + fmt_num(r.m.c3, 3) + " c2=" + fmt_num(r.m.c2, 3),
             reproducing_residual(r.m, r.w, f), r.tol);
    }

    {
        const Measure m(1, 1, 0, 0.5);
        c.le("ODE residual c3 = 0, w = 0.3", ode_residual(m, solve_integral_eq(m, 0.3, 200)), 1e-7);
        const Measure m1(1, 1, 1, 0.5);
        c.le("ODE residual c3 = 1, w = 0", ode_residual(m1, solve_integral_eq(m1, 0, 200)), 1e-6);
    }
}

double hand_form_factor(const std::vector<double>& g, double lambda, double T, double alpha) {
    cplx s = 0;
    for (double a : g)
        for (double b : g) s += std::exp(cplx(0, lambda * alpha * (a - b) * std::log(T))) * (4 / (4 + (a - b) * (a - b)));
    return s.real() / (lambda * T / (2 * kPi) * std::log(T));
}

void suite_formfactor(Ctx& c) {
    Rng rng(0x666f726d66ULL);
    {
        const ZeroDataset ds = make_dataset({10}, 1);
        c.le("single ordinate diagonal value", std::abs(form_factor(ds, 100, 0.37) - 0.0136438), 1e-6);
        const ZeroDataset two = make_dataset({10, 10.5}, 1);
        const double expect = (2 + 2 * (4 / 4.25)) / form_factor_normalizer(two, 100);
        c.le("two ordinates hand expansion", std::abs(form_factor(two, 100, 0) - expect), 1e-12);
    }
    double hand = 0, pos = 0, even = 0, minv = 1e300;
    for (int t = 0; t < 10; ++t) {
        std::vector<double> g;
        const int n = 1 + t % 5;
        for (int i = 0; i < n; ++i) g.push_back(rng.uniform(1, 30));
        const ZeroDataset ds = make_dataset(g, rng.uniform(0.5, 2));
        const double T = 40, alpha = rng.uniform(-3, 3);
        const double f = form_factor(ds, T, alpha);
        hand = std::max(hand, std::abs(f - hand_form_factor(ds.ordinates, ds.lambda, T, alpha)));
        pos = std::max(pos, std::abs(f - form_factor_positive(ds, T, alpha, 10)));
        even = std::max(even, std::abs(f - form_factor(ds, T, -alpha)));
        minv = std::min(minv, f);
    }
    c.le("form factor vs term-by-term expansion", hand, 1e-12);
    c.le("form factor vs positive representation", pos, 1e-6);
    c.le("form factor even in alpha", even, 1e-12);
    c.holds("form factor >= -1e-10", minv >= -1e-10);

    {
        std::vector<double> g;
        for (int i = 0; i < 12; ++i) g.push_back(rng.uniform(5, 60));
        const ZeroDataset ds = make_dataset(g, 1);
        const double T = 60, b = 0.5, ell = 1.0, step = 0.05, beta = b + ell;
        const double lhs = windowed_average(ds, T, b, ell, step).value;
        const double rhs = beta / ell * symmetric_average(ds, T, beta, step).value -
                           b / ell * symmetric_average(ds, T, b, step).value;
        c.le("windowed average = symmetric-average combination", std::abs(lhs - rhs), 1e-9);
    }

    for (double beta : {0.5, 1.0, 2.5}) {
        const FejerReport r = fejer_report(beta);
        c.holds("fejer witness g(0) = beta, beta=" + fmt_num(beta, 3), r.g0 == beta && fejer_check(beta) == beta);
        c.holds("fejer witness admissible, beta=" + fmt_num(beta, 3), r.admissible);
        c.le("Poisson identity, beta=" + fmt_num(beta, 3),
             std::abs(r.lattice_partial + r.tail_estimate - r.fourier_side) - r.tail_bound, 1e-9);
        c.le("Poisson tail bound, beta=" + fmt_num(beta, 3), r.tail_bound, 1e-9);
    }

    {
        double worst = -1e300;
        for (double beta : {0.5, 1.0, 2.5})
            for (int t = 0; t < 20; ++t) {
                // ĝ = normalized autocorrelation of a nonnegative step function on [-β/2, β/2]
                const int K = 2 + t % 9;
                double s1 = 0, s2 = 0;
                for (int k = 0; k < K; ++k) {
                    const double a = rng.uniform(0, 1);
                    s1 += a;
                    s2 += a * a;
                }
                const double width = beta / K;
                const double g0 = s1 * s1 * width / s2;
                worst = std::max(worst, g0 - beta);
            }
        c.le("random R_beta competitors satisfy g(0) <= beta", worst, 1e-6);
    }

    {
        std::vector<double> grid, ones, fejer;
        for (int i = -400; i <= 400; ++i) {
            const double a = i / 400.0;
            grid.push_back(a);
            ones.push_back(1);
            fejer.push_back(std::max(0.0, 1 - std::abs(a)));
        }
        std::vector<double> grid_half;
        for (double a : grid) grid_half.push_back(a * 0.5);
        c.le("phi(1) for (1,1,0,0.5)", std::abs(phi_functional(Measure(1, 1, 0, 0.5), ones, grid_half) - 1.25), 1e-12);
        c.le("phi(fejer) for (1,1,0,1)", std::abs(phi_functional(Measure(1, 1, 0, 1), fejer, grid) - 4.0 / 3), 1e-12);
    }

    for (const Measure& m : {Measure(1, 1, 0, 0.5), Measure(1, 1, 1, 0.5), Measure(1, 0, 0, 1)})
        c.le("EP1 ratio vs 1/K(0,0), c2=" + fmt_num(m.c2, 3) + " c3=" + fmt_num(m.c3, 3),
             std::abs(ep1_ratio_check(m) - 1 / kernel_k00(m)), 1e-5);
}

void suite_bounds(Ctx& c) {
    {
        const BoundPair s1 = selberg_bounds(1);
        const double up = 1 / (std::sqrt(2.0) * std::tan(1 / std::sqrt(2.0))) + 0.5;
        c.le("selberg m=1 upper", std::abs(s1.upper - up), 1e-12);
        c.le("selberg m=1 lower", std::abs(s1.lower - (0.5 + s0() * (up - 1) + 0.5)), 1e-12);
        {
            const double r = selberg_bounds(1000).upper / 1000;
            c.holds("selberg m=1000 upper/m in (1, 1.001)", r > 1 && r < 1.001);
        }
        c.le("dedekind n=2 upper", std::abs(dedekind_bounds(2).upper - (1 / std::tan(0.5) + 0.5)), 1e-12);
    }
    double e = 0;
    for (int k = 1; k <= 20; ++k) {
        const BoundsReport a = average_bounds(Measure(1, 1, 0, 1.0 / k));
        const BoundPair s = selberg_bounds(k);
        const BoundsReport d = average_bounds(Measure(1, k, 0, 1.0 / k));
        const BoundPair q = dedekind_bounds(k);
        e = std::max({e, std::abs(a.upper - s.upper), std::abs(a.lower_cor8 - s.lower), std::abs(d.upper - q.upper),
                      std::abs(d.lower_cor8 - q.lower)});
    }
    c.le("selberg/dedekind = average_bounds of their measures", e, 1e-12);
    {
        const BoundsReport r = average_bounds(Measure(1, 1, 0, 0.5));
        c.le("clamped lower bound equals the unclamped one when the clamp is slack", std::abs(r.lower_cor8 - r.lower_thm1), 1e-15);
        c.holds("lower_thm1 <= 1 and lower_cor8 >= 1/2", r.lower_thm1 <= 1 && r.lower_cor8 >= 0.5);
        const double u = reim_zeta_bounds(1000).upper;
        c.holds("reim upper(c = 1000) in (2, 2.01)", u > 2 && u < 2.01);
        const auto rows = figure1_data(0, 2, 200);
        c.holds("figure1 201 rows", rows.size() == 201);
        c.le("figure1 row 0 upper", std::abs(rows[0].upper - 1 / kernel_k00(Measure(1, 1, 0, 0.5))), 1e-15);
    }
    c.le("Gonek-Ki average (1,1,1)", std::abs(gonek_ki_conjectured_average(1, 1, 1) - 0.0022475), 1e-7);
    c.le("Gonek-Ki average c -> 0", std::abs(gonek_ki_conjectured_average(1, 1, 1e-12) - 0.5), 1e-9);
    {
        const RefutationThreshold t = refutation_threshold(1, 1);
        c.holds("refutation (c=1,b=1) already below 1/2", t.status == ThresholdStatus::AlreadyBelow && t.ell == 0);
        const RefutationThreshold x = refutation_threshold(0.01, 1, 0.1);
        c.le("refutation crossing average(l*) = floor", std::abs(gonek_ki_conjectured_average(1, x.ell, 0.01) - 0.1), 1e-6);
        c.holds("refutation threshold grows as c shrinks",
                refutation_threshold(0.005, 1, 0.1).ell > x.ell && x.ell > refutation_threshold(0.02, 1, 0.1).ell);
        const double reim_lower = reim_zeta_bounds(0.1).lower;
        c.holds("c = 0.1 average below the reim lower bound",
                gonek_ki_conjectured_average(1, 1e-9, 0.1) < std::min(0.5, reim_lower));
    }
}

const std::vector<std::pair<std::string, std::function<void(Ctx&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> r = {
        {"constants", suite_constants}, {"kernels", suite_kernels},       {"appendix", suite_appendix},
        {"oracle", suite_oracle},       {"formfactor", suite_formfactor}, {"bounds", suite_bounds}};
    return r;
}

}  // namespace

std::vector<std::string> verify_suites() {
    std::vector<std::string> s;
    for (const auto& [name, fn] : registry()) s.push_back(name);
    s.push_back("all");
    return s;
}

std::vector<CheckResult> run_verify(const std::string& suite) {
    std::vector<CheckResult> out;
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        Ctx ctx{out, name};
        try {
            fn(ctx);
        } catch (const std::exception& e) {
            out.push_back({name, std::string("exception: ") + e.what(), false, 1, 0});
        }
    }
    if (!found) throw InvalidRegime("unknown verify suite '" + suite + "'");
    return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string s;
    int fails = 0;
    for (const auto& r : results) {
        fails += !r.pass;
        s += (r.pass ? "PASS " : "FAIL ") + r.suite + ": " + r.name + "  measured=" + fmt_num(r.measured, 6) +
             " tol=" + fmt_num(r.tolerance, 6) + "\n";
    }
    s += std::to_string(results.size() - fails) + "/" + std::to_string(results.size()) + " checks passed\n";
    return s;
}

}  // namespace pairpack
