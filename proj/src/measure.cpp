#include "pairpack/measure.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace pairpack {

Measure::Measure(double c1_, double c2_, double c3_, double delta_)
    : c1(c1_), c2(c2_), c3(c3_), delta(delta_) {
    if (!(c1 > 0) || !(c2 >= 0) || !(c3 >= 0) || !(delta > 0) || !std::isfinite(c1) ||
        !std::isfinite(c2) || !std::isfinite(c3) || !std::isfinite(delta))
        throw InvalidRegime("measure requires c1 > 0, c2 >= 0, c3 >= 0, delta > 0 (all finite)");
}

double standard_threshold() { return 5.0 / 3.0; }

double extended_threshold() { return 1.0 / sup_g(); }

bool Measure::is_admissible() const { return sigma() <= standard_threshold(); }

bool Measure::is_extended_admissible() const { return sigma() < extended_threshold(); }

double g_surface(double s, double t) {
    const std::complex<double> z(-s, t);
    if (std::abs(z) < 1.0) {
        // (e^z(1-z) - 1)/z^2 = sum_{n>=2} (1-n)/n! z^{n-2}
        std::complex<double> sum = 0, zp = 1;
        double fact = 2;
        for (int n = 2; n < 30; ++n) {
            sum += (1.0 - n) / fact * zp;
            zp *= z;
            fact *= n + 1;
        }
        return 2 * sum.real();
    }
    return 2 * ((std::exp(z) * (1.0 - z) - 1.0) / (z * z)).real();
}

namespace {

double sup_objective(double t) { return g_surface(0, t); }

SupG compute_sup_g() {
    // (2 + 2t)/t^2 < 0.58 for t > 20, so the max lies in (0, 20]
    double best_t = 0.01, best = sup_objective(best_t);
    for (double t = 0.01; t <= 20; t += 0.01) {
        double v = sup_objective(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double a = best_t - 0.01, b = best_t + 0.01;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = sup_objective(x1), f2 = sup_objective(x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = sup_objective(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = sup_objective(x1);
        }
    }
    double t = (a + b) / 2;
    return {sup_objective(t), t};
}

}  // namespace

SupG sup_g_argmax() {
    static const SupG cached = compute_sup_g();
    return cached;
}

double sup_g() { return sup_g_argmax().value; }

double nu_hat(const Measure& m, double x) {
    const double two_pi = 2 * std::acos(-1.0);
    return m.c1 - m.c2 * m.delta * m.delta * g_surface(m.c3 * m.delta, two_pi * m.delta * std::abs(x));
}

void require_admissible(const Measure& m, Gate gate) {
    if (m.passes(gate)) return;
    std::ostringstream os;
    os.precision(6);
    os << "sigma = (c2/c1)*delta^2 = " << m.sigma() << " exceeds the "
       << (gate == Gate::Standard ? "standard threshold 5/3" : "extended threshold 1/sup_g")
       << "; kernel construction is not certified";
    throw NotAdmissible(os.str());
}

NormEquivalence norm_bounds(const Measure& m) {
    require_admissible(m, Gate::Extended);
    const double mass = m.c2 * m.delta * m.delta;
    NormEquivalence r;
    r.b_sq = m.c1 + mass;
    r.a_sq = m.c2 > 0 ? m.c1 - mass * sup_g() : m.c1;
    return r;
}

}  // namespace pairpack
