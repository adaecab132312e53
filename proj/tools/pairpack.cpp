#include "pairpack/bounds.hpp"
#include "pairpack/format.hpp"
#include "pairpack/formfactor.hpp"
#include "pairpack/fredholm.hpp"
#include "pairpack/kernel.hpp"
#include "pairpack/measure.hpp"
#include "pairpack/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace pairpack;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kBadFlags = 1, kNotAdmissible = 2, kVerifyFailed = 3 };

struct Output {
    std::string path;
    std::string format = "csv";

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParseError(path, 0, "", "cannot open output file");
        f << text;
    }
    bool csv() const { return format == "csv"; }
};

void add_output(CLI::App* sub, Output& out) {
    sub->add_option("--out", out.path, "Write to FILE instead of stdout");
    sub->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

struct MeasureFlags {
    double c1 = 1, c2 = 1, c3 = 0, delta = 0.5;
    bool extended = false;
    Gate gate() const { return extended ? Gate::Extended : Gate::Standard; }
    Measure measure() const { return Measure(c1, c2, c3, delta); }
};

void add_measure(CLI::App* sub, MeasureFlags& m, bool required) {
    auto a = sub->add_option("--c1", m.c1, "Dirac mass c1 > 0");
    auto b = sub->add_option("--c2", m.c2, "density coefficient c2 >= 0");
    auto c = sub->add_option("--c3", m.c3, "decay rate c3 >= 0");
    auto d = sub->add_option("--delta", m.delta, "support half-length > 0");
    if (required)
        for (auto* o : {a, b, c, d}) o->required();
    sub->add_flag("--extended", m.extended, "gate on sigma < 1/sup_g instead of 5/3");
}

/// "a:b:step" -> a, a+step, ..., b (index-based, so no drift).
std::vector<double> parse_range(const std::string& spec, const std::string& flag) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "expected a:b:step, got '" + spec + "'");
        }
    }
    if (parts.size() != 3 || !(parts[2] > 0) || !(parts[1] >= parts[0]))
        throw CLI::ValidationError(flag, "expected a:b:step with a <= b and step > 0");
    const long n = long(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    std::vector<double> v;
    for (long i = 0; i <= n; ++i) v.push_back(parts[0] + i * parts[2]);
    return v;
}

std::string num(double v) { return fmt_num(v); }

int cmd_kernel(const MeasureFlags& mf, const std::string& grid, const Output& out) {
    const Measure m = mf.measure();
    const double K = kernel_k00(m, mf.gate());
    if (!grid.empty()) {
        const std::vector<double> zs = parse_range(grid, "--grid");
        std::string text = out.csv() ? "z,re,im\n" : "";
        json rows = json::array();
        const KernelRow0 row(m, mf.gate());
        for (double z : zs) {
            const cplx k = row(z);
            if (out.csv())
                text += csv_row({z, k.real(), k.imag()}) + "\n";
            else
                rows.push_back({{"z", z}, {"re", k.real()}, {"im", k.imag()}});
        }
        out.emit(out.csv() ? text : rows.dump(2) + "\n");
        return kOk;
    }
    std::vector<std::pair<std::string, std::string>> kv = {
        {"c1", num(m.c1)},         {"c2", num(m.c2)},       {"c3", num(m.c3)},
        {"delta", num(m.delta)},   {"sigma", num(m.sigma())},
        {"admissible", m.is_admissible() ? "true" : "false"},
        {"extended_admissible", m.is_extended_admissible() ? "true" : "false"},
        {"K00", num(K)},           {"inv_K00", num(1 / K)}};
    if (m.c3 > 0 && m.c2 > 0) {
        const EtaPair ep = quartic_roots(m);
        kv.push_back({"eta1_re", num(ep.eta1.real())});
        kv.push_back({"eta1_im", num(ep.eta1.imag())});
        kv.push_back({"eta2_re", num(ep.eta2.real())});
        kv.push_back({"eta2_im", num(ep.eta2.imag())});
        kv.push_back({"case", to_string(ep.case_tag)});
        if (!ep.degenerate) {
            const cplx L = script_L(m);
            kv.push_back({"L_re", num(L.real())});
            kv.push_back({"L_im", num(L.imag())});
        }
    }
    if (out.csv()) {
        std::string text = "key,value\n";
        for (const auto& [k, v] : kv) text += k + "," + v + "\n";
        out.emit(text);
    } else {
        json j;
        for (const auto& [k, v] : kv) {
            if (v == "true" || v == "false")
                j[k] = v == "true";
            else if (k == "case")
                j[k] = v;
            else
                j[k] = std::stod(v);
        }
        out.emit(j.dump(2) + "\n");
    }
    return kOk;
}

int cmd_bounds(const MeasureFlags& mf, bool have_measure, std::optional<int> selberg, std::optional<int> dedekind,
               std::optional<double> reim, const Output& out) {
    std::vector<std::pair<std::string, double>> kv;
    std::string label;
    if (selberg) {
        const BoundPair b = selberg_bounds(*selberg);
        label = "selberg m=" + std::to_string(*selberg);
        kv = {{"lower", b.lower}, {"upper", b.upper}};
    } else if (dedekind) {
        const BoundPair b = dedekind_bounds(*dedekind);
        label = "dedekind n=" + std::to_string(*dedekind);
        kv = {{"lower", b.lower}, {"upper", b.upper}};
    } else if (reim) {
        const BoundPair b = reim_zeta_bounds(*reim);
        label = "reim c=" + num(*reim);
        kv = {{"lower", b.lower}, {"upper", b.upper}};
    } else if (have_measure) {
        const BoundsReport r = average_bounds(mf.measure(), mf.gate());
        label = "measure";
        kv = {{"c_nu_upper", r.c_nu_upper}, {"lower_thm1", r.lower_thm1}, {"lower_cor8", r.lower_cor8},
              {"lower_thm2", r.lower_thm2}, {"best_lower", r.best_lower}, {"upper", r.upper},
              {"clamp_active", r.clamp_active ? 1.0 : 0.0}};
    } else {
        throw CLI::ValidationError("bounds", "give --selberg-degree, --dedekind-degree, --reim-c or measure flags");
    }
    if (out.csv()) {
        std::string text = "quantity,value\n";
        for (const auto& [k, v] : kv) text += k + "," + num(v) + "\n";
        out.emit(text);
    } else {
        json j;
        j["source"] = label;
        for (const auto& [k, v] : kv) j[k] = v;
        out.emit(j.dump(2) + "\n");
    }
    return kOk;
}

int cmd_figure1(double c_min, double c_max, int steps, const Output& out) {
    const auto rows = figure1_data(c_min, c_max, steps);
    if (out.csv()) {
        std::string text = "c,lower,upper\n";
        for (const auto& r : rows) text += csv_row({r.c, r.lower, r.upper}) + "\n";
        out.emit(text);
    } else {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"c", r.c}, {"lower", r.lower}, {"upper", r.upper}});
        out.emit(j.dump(2) + "\n");
    }
    return kOk;
}

struct FormFactorFlags {
    std::string zeros, T = "auto", alpha = "0:3:0.01", avg, window = "0T";
    std::optional<double> lambda;
    double avg_step = 0;
};

int cmd_formfactor(const FormFactorFlags& f, const Output& out) {
    const ZeroDataset ds = load_zeros(f.zeros, f.lambda, window_from_string(f.window));
    for (const auto& w : ds.warnings) std::cerr << "warning: " << w << "\n";
    double T;
    if (f.T == "auto") {
        T = ds.ordinates.back();
    } else {
        try {
            T = std::stod(f.T);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--T", "expected a number or 'auto'");
        }
    }
    const std::vector<double> alphas = parse_range(f.alpha, "--alpha");
    const std::vector<double> F = form_factor_grid(ds, T, alphas);
    std::optional<WindowedAverage> avg;
    double b = 0, ell = 0;
    if (!f.avg.empty()) {
        const auto colon = f.avg.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument(f.avg);
            b = std::stod(f.avg.substr(0, colon));
            ell = std::stod(f.avg.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--avg", "expected b:ell");
        }
        avg = windowed_average(ds, T, b, ell, f.avg_step > 0 ? f.avg_step : ell / 100);
    }
    if (out.csv()) {
        std::string text = "alpha,F\n";
        for (std::size_t i = 0; i < alphas.size(); ++i) text += csv_row({alphas[i], F[i]}) + "\n";
        if (avg)
            text += "# average b=" + num(b) + " ell=" + num(ell) + " step=" + num(avg->grid_step) +
                    " value=" + num(avg->value) + "\n";
        out.emit(text);
    } else {
        json j;
        j["dataset"] = ds.source;
        j["T"] = T;
        j["lambda"] = ds.lambda;
        j["window"] = to_string(ds.window);
        j["alpha"] = alphas;
        j["F"] = F;
        if (avg) j["average"] = {{"b", b}, {"ell", ell}, {"grid_step", avg->grid_step}, {"value", avg->value}};
        out.emit(j.dump(2) + "\n");
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const Output& out) {
    const auto results = run_verify(suite);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (out.csv()) {
        out.emit(format_report(results));
    } else {
        json j = json::array();
        for (const auto& r : results)
            j.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"measured", r.measured},
                         {"tolerance", r.tolerance}});
        out.emit(j.dump(2) + "\n");
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_oracle(const MeasureFlags& mf, double w_re, double w_im, int n, const std::string& grid, const Output& out) {
    const Measure m = mf.measure();
    const NystromSolution sol = solve_integral_eq(m, cplx(w_re, w_im), n);
    if (!sol.certified) std::cerr << "warning: sigma in (5/3, 2): solvable, but the kernel reading is uncertified\n";
    const std::vector<double> zs = grid.empty() ? std::vector<double>{0.0} : parse_range(grid, "--grid");
    if (out.csv()) {
        std::string text = "# condition=" + num(sol.condition_estimate) + " residual=" + num(sol.residual) + "\n";
        text += "z,re,im\n";
        for (double z : zs) {
            const cplx k = std::conj(k_from_u(sol, z));
            text += csv_row({z, k.real(), k.imag()}) + "\n";
        }
        out.emit(text);
    } else {
        json j;
        j["condition"] = sol.condition_estimate;
        j["residual"] = sol.residual;
        j["certified"] = sol.certified;
        json rows = json::array();
        for (double z : zs) {
            const cplx k = std::conj(k_from_u(sol, z));
            rows.push_back({{"z", z}, {"re", k.real()}, {"im", k.imag()}});
        }
        j["K"] = rows;
        out.emit(j.dump(2) + "\n");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairpack: reproducing kernels, pair-correlation bounds and their oracles"};
    app.require_subcommand(1);

    Output out;
    MeasureFlags mf;

    auto* kernel = app.add_subcommand("kernel", "K(0,0), roots and L for a measure; optional K(0,z) grid");
    add_measure(kernel, mf, true);
    std::string kgrid;
    kernel->add_option("--grid", kgrid, "z grid a:b:step");
    add_output(kernel, out);

    auto* bounds = app.add_subcommand("bounds", "bound constants");
    add_measure(bounds, mf, false);
    std::optional<int> selberg, dedekind;
    std::optional<double> reim;
    bounds->add_option("--selberg-degree", selberg, "Selberg class degree m")->check(CLI::PositiveNumber);
    bounds->add_option("--dedekind-degree", dedekind, "abelian field degree n")->check(CLI::PositiveNumber);
    bounds->add_option("--reim-c", reim, "c for the measure (1, 1, 4c, 1/2)")->check(CLI::NonNegativeNumber);
    add_output(bounds, out);

    auto* figure1 = app.add_subcommand("figure1", "lower/upper bounds against c for the measure (1, 1, 4c, 1/2)");
    double c_min = 0, c_max = 2;
    int steps = 200;
    figure1->add_option("--c-min", c_min)->check(CLI::NonNegativeNumber);
    figure1->add_option("--c-max", c_max);
    figure1->add_option("--steps", steps)->check(CLI::PositiveNumber);
    add_output(figure1, out);

    auto* ff = app.add_subcommand("formfactor", "empirical form factor of a zero dataset");
    FormFactorFlags fff;
    ff->add_option("--zeros", fff.zeros, "ordinate file")->required()->check(CLI::ExistingFile);
    ff->add_option("--lambda", fff.lambda, "density parameter (default: file header, else 1)");
    ff->add_option("--T", fff.T, "height T or 'auto' (largest ordinate)");
    ff->add_option("--alpha", fff.alpha, "alpha grid a:b:step");
    ff->add_option("--avg", fff.avg, "windowed average b:ell");
    ff->add_option("--avg-step", fff.avg_step, "alpha step for the average (default ell/100)");
    ff->add_option("--window", fff.window, "0T, T2T or symmetric");
    add_output(ff, out);

    auto* verify = app.add_subcommand("verify", "run the oracle and invariant suites");
    std::string suite = "all";
    verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));
    add_output(verify, out);

    auto* oracle = app.add_subcommand("oracle", "Nystrom solution of the integral equation and its kernel");
    add_measure(oracle, mf, true);
    double w_re = 0, w_im = 0;
    int n = 200;
    std::string ogrid;
    oracle->add_option("--w-re", w_re);
    oracle->add_option("--w-im", w_im);
    oracle->add_option("--n", n)->check(CLI::Range(16, 4000));
    oracle->add_option("--grid", ogrid, "z grid a:b:step");
    add_output(oracle, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadFlags;
    }

    try {
        if (*kernel) return cmd_kernel(mf, kgrid, out);
        if (*bounds) return cmd_bounds(mf, bounds->count("--c1") > 0, selberg, dedekind, reim, out);
        if (*figure1) return cmd_figure1(c_min, c_max, steps, out);
        if (*ff) return cmd_formfactor(fff, out);
        if (*verify) return cmd_verify(suite, out);
        if (*oracle) return cmd_oracle(mf, w_re, w_im, n, ogrid, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadFlags;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotAdmissible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadFlags;
    }
    return kBadFlags;
}
