#include "pairpack/formfactor.hpp"

#include "pairpack/kernel.hpp"
#include "pairpack/quadrature.hpp"
#include "lattice.hpp"
#include "special.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace pairpack {

using detail::pi;

const char* to_string(Window w) {
    switch (w) {
        case Window::ZeroToT: return "0..T";
        case Window::TToTwoT: return "T..2T";
        case Window::SymmetricT: return "-T/2..T/2";
    }
    return "?";
}

Window window_from_string(const std::string& s) {
    if (s == "0..T" || s == "zero-to-T" || s == "0T") return Window::ZeroToT;
    if (s == "T..2T" || s == "T-to-2T" || s == "T2T") return Window::TToTwoT;
    if (s == "-T/2..T/2" || s == "symmetric") return Window::SymmetricT;
    throw InvalidRegime("unknown window '" + s + "' (use 0T, T2T or symmetric)");
}

unsigned worker_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PAIRPACK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, unsigned(cap));
    }
    return n;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && p == end && std::isfinite(out);
}

// Runs body(chunk) for chunk = 0..nchunks-1 on the worker threads.
template <typename F>
void parallel_chunks(std::size_t nchunks, F&& body) {
    const unsigned nt = std::min<std::size_t>(worker_threads(), nchunks);
    if (nt <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) body(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t c; (c = next.fetch_add(1)) < nchunks;) body(c);
        });
    for (auto& th : pool) th.join();
}

constexpr std::size_t kRowsPerChunk = 32;

// Σ_{i<j} cos(θ(γ_j - γ_i)) w(γ_j - γ_i), summed per fixed row chunk then in chunk order.
double off_diagonal_sum(const std::vector<double>& g, double theta) {
    const std::size_t n = g.size();
    const std::size_t nchunks = (n + kRowsPerChunk - 1) / kRowsPerChunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_chunks(nchunks, [&](std::size_t c) {
        double s = 0;
        const std::size_t end = std::min(n, (c + 1) * kRowsPerChunk);
        for (std::size_t i = c * kRowsPerChunk; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = g[j] - g[i];
                s += std::cos(theta * d) * pair_weight(d);
            }
        partial[c] = s;
    });
    double s = 0;
    for (double p : partial) s += p;
    return s;
}

}  // namespace

ZeroDataset load_zeros(const std::string& path, std::optional<double> lambda, Window window) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "", "cannot open file");
    ZeroDataset ds;
    ds.source = path;
    ds.window = window;
    std::optional<double> header_lambda;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string body = trim(t.substr(1));
            if (body.rfind("lambda=", 0) == 0) {
                double v;
                if (!parse_double(trim(body.substr(7)), v) || !(v > 0))
                    throw ParseError(path, lineno, t, "bad lambda header");
                header_lambda = v;
            }
            continue;
        }
        double v;
        if (!parse_double(t, v)) throw ParseError(path, lineno, t, "not a decimal number");
        ds.ordinates.push_back(v);
    }
    if (ds.ordinates.empty()) throw EmptyDataset(path + ": no ordinates");
    if (!std::is_sorted(ds.ordinates.begin(), ds.ordinates.end())) {
        std::sort(ds.ordinates.begin(), ds.ordinates.end());
        ds.warnings.push_back(path + ": ordinates were not sorted; sorted on load");
    }
    ds.lambda = lambda ? *lambda : header_lambda.value_or(1.0);
    if (!(ds.lambda > 0)) throw InvalidRegime("lambda must be > 0");
    return ds;
}

ZeroDataset make_dataset(std::vector<double> ordinates, double lambda, Window window, std::string source) {
    if (ordinates.empty()) throw EmptyDataset("dataset has no ordinates");
    if (!(lambda > 0)) throw InvalidRegime("lambda must be > 0");
    for (double v : ordinates)
        if (!std::isfinite(v)) throw InvalidRegime("ordinates must be finite");
    ZeroDataset ds;
    ds.lambda = lambda;
    ds.window = window;
    ds.source = std::move(source);
    if (!std::is_sorted(ordinates.begin(), ordinates.end())) {
        std::sort(ordinates.begin(), ordinates.end());
        ds.warnings.push_back("ordinates were not sorted; sorted on load");
    }
    ds.ordinates = std::move(ordinates);
    return ds;
}

std::vector<double> window_ordinates(const ZeroDataset& ds, double T) {
    double lo, hi;
    bool open_lo = false;
    switch (ds.window) {
        case Window::ZeroToT: lo = 0, hi = T, open_lo = true; break;
        case Window::TToTwoT: lo = T, hi = 2 * T; break;
        default: lo = -T / 2, hi = T / 2; break;
    }
    std::vector<double> out;
    for (double g : ds.ordinates)
        if ((open_lo ? g > lo : g >= lo) && g <= hi) out.push_back(g);
    if (out.empty()) throw EmptyWindow("no ordinates in window " + std::string(to_string(ds.window)));
    return out;
}

double form_factor_normalizer(const ZeroDataset& ds, double T) {
    if (!(T > 1)) throw InvalidRegime("T must exceed 1");
    return ds.lambda * T / (2 * pi) * std::log(T);
}

double pair_weight(double u) { return 4 / (4 + u * u); }

double form_factor(const ZeroDataset& ds, double T, double alpha) {
    const double norm = form_factor_normalizer(ds, T);
    const std::vector<double> g = window_ordinates(ds, T);
    const double theta = ds.lambda * alpha * std::log(T);
    return (double(g.size()) + 2 * off_diagonal_sum(g, theta)) / norm;
}

std::vector<double> form_factor_grid(const ZeroDataset& ds, double T, const std::vector<double>& alphas) {
    std::vector<double> out;
    out.reserve(alphas.size());
    for (double a : alphas) out.push_back(form_factor(ds, T, a));
    return out;
}

double form_factor_positive(const ZeroDataset& ds, double T, double alpha, double u_cutoff) {
    if (!(u_cutoff > 0)) throw InvalidRegime("u_cutoff must be > 0");
    const double norm = form_factor_normalizer(ds, T);
    std::vector<double> g = window_ordinates(ds, T);
    // |Σ e^{iγφ}|² is unchanged by shifting every γ, so centre them to keep phases small
    const double centre = (g.front() + g.back()) / 2;
    for (double& v : g) v -= centre;
    const double spread = g.back() - g.front();
    const double theta = ds.lambda * alpha * std::log(T);
    const double width = spread > 0 ? std::min(0.05, 0.5 / spread) : 0.05;
    const long panels = long(std::ceil(u_cutoff / width));
    const double hw = u_cutoff / panels;
    static const GaussRule<double> rule = gauss_legendre<double>(16);
    auto density = [&](double u) {
        const double phi = theta + 2 * pi * u;
        double re = 0, im = 0;
        for (double v : g) {
            re += std::cos(v * phi);
            im += std::sin(v * phi);
        }
        return 2 * pi * std::exp(-4 * pi * std::abs(u)) * (re * re + im * im);
    };
    double s = 0;
    for (long p = 0; p < panels; ++p) {
        s += integrate(rule, density, p * hw, (p + 1) * hw);
        s += integrate(rule, density, -(p + 1) * hw, -p * hw);
    }
    return s / norm;
}

namespace {

WindowedAverage trapezoid_average(const ZeroDataset& ds, double T, double a, double b, double grid_step) {
    const double len = b - a;
    const long n = long(std::ceil(len / grid_step - 1e-9));
    const double step = len / n;
    std::vector<double> alphas(n + 1);
    for (long i = 0; i <= n; ++i) alphas[i] = i == n ? b : a + step * i;
    const std::vector<double> f = form_factor_grid(ds, T, alphas);
    double s = (f.front() + f.back()) / 2;
    for (long i = 1; i < n; ++i) s += f[i];
    return {s * step / len, step};
}

}  // namespace

WindowedAverage windowed_average(const ZeroDataset& ds, double T, double b, double ell, double grid_step) {
    if (!(b >= 0) || !(ell > 0)) throw InvalidRegime("windowed_average needs b >= 0, ell > 0");
    if (!(grid_step > 0) || grid_step > ell / 16 * (1 + 1e-12))
        throw InvalidRegime("grid_step must be in (0, ell/16]");
    return trapezoid_average(ds, T, b, b + ell, grid_step);
}

WindowedAverage symmetric_average(const ZeroDataset& ds, double T, double beta, double grid_step) {
    if (!(beta > 0) || !(grid_step > 0)) throw InvalidRegime("symmetric_average needs beta, grid_step > 0");
    return trapezoid_average(ds, T, -beta, beta, grid_step);
}

double phi_functional(const Measure& m, const std::vector<double>& g_hat, const std::vector<double>& grid) {
    if (g_hat.size() != grid.size() || grid.size() < 2)
        throw InvalidRegime("phi_functional needs matching samples and grid (>= 2 points)");
    if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidRegime("grid must be ascending");
    const double D = m.delta;
    if (grid.front() > -D || grid.back() < D) throw InvalidRegime("grid must cover [-delta, delta]");
    static const GaussRule<double> rule = gauss_legendre<double>(16);
    double at0 = 0, cont = 0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double x0 = grid[i], x1 = grid[i + 1];
        if (x1 == x0) continue;
        auto lin = [&](double a) { return g_hat[i] + (g_hat[i + 1] - g_hat[i]) * (a - x0) / (x1 - x0); };
        if (x0 <= 0 && 0 <= x1) at0 = lin(0);
        auto f = [&](double a) { return lin(a) * std::abs(a) * std::exp(-m.c3 * std::abs(a)); };
        const double lo = std::max(x0, -D), hi = std::min(x1, D);
        if (hi <= lo) continue;
        if (lo < 0 && hi > 0) {
            cont += integrate(rule, f, lo, 0.0) + integrate(rule, f, 0.0, hi);
        } else {
            cont += integrate(rule, f, lo, hi);
        }
    }
    return m.c1 * at0 + m.c2 * cont;
}

double ep1_ratio_check(const Measure& m, Gate gate) {
    const KernelRow0 row(m, gate);
    const double k00 = row(0).real();
    // g ν̂ has Fourier support in [-2Δ, 2Δ]; a lattice finer than 1/(2Δ) integrates it exactly
    const double hs = 1 / (3 * m.delta);
    const long N = 120000;
    auto f = [&](long n) {
        const double x = n * hs;
        return cplx(std::norm(row(x)) * nu_hat(m, x), 0);
    };
    const double integral = detail::lattice_integral(f, hs, N).real();
    return integral / (k00 * k00);
}

namespace {

// ψ'(x) for x >= 10 by its asymptotic series
double trigamma_large(double x) {
    const double x2 = x * x;
    return 1 / x + 1 / (2 * x2) + 1 / (6 * x2 * x) - 1 / (30 * x2 * x2 * x) + 1 / (42 * x2 * x2 * x2 * x);
}

}  // namespace

FejerReport fejer_report(double beta, long N) {
    if (!(beta > 0)) throw InvalidRegime("beta must be > 0");
    if (N < 10) throw InvalidRegime("fejer lattice needs N >= 10");
    FejerReport r;
    auto g = [&](double x) {
        if (x == 0) return beta;
        const double y = pi * beta * x;
        const double s = std::sin(y) / y;
        return beta * s * s;
    };
    auto g_hat = [&](double a) { return std::max(0.0, 1 - std::abs(a) / beta); };
    r.g0 = g(0);
    bool ok = true;
    for (int i = -400; i <= 400; ++i) {
        const double a = 2 * beta * i / 400.0;
        const double indicator = std::abs(a) <= beta ? 1.0 : 0.0;
        if (g_hat(a) > indicator) ok = false;
        if (g(a * 7.3) < 0) ok = false;
    }
    r.admissible = ok;
    // sum small terms first
    double s = 0;
    for (long n = N; n >= 1; --n) s += g(double(n));
    r.lattice_partial = g(0) + 2 * s;
    const bool integer_beta = std::abs(beta - std::round(beta)) < 1e-15;
    if (integer_beta) {
        r.tail_estimate = 0;
        r.tail_bound = 0;
    } else {
        r.tail_estimate = trigamma_large(double(N + 1)) / (pi * pi * beta);
        r.tail_bound = 1 / (pi * pi * beta * std::abs(std::sin(pi * beta)) * double(N + 1) * double(N + 1));
    }
    double fs = 0;
    for (long k = -long(std::ceil(beta)); k <= long(std::ceil(beta)); ++k) fs += g_hat(double(k));
    r.fourier_side = fs;
    return r;
}

double fejer_check(double beta) { return fejer_report(beta, 10).g0; }

}  // namespace pairpack
