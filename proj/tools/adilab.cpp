// Command line front end: evaluation, expansion, decomposition, verification,
// curve scans, and the nonvanishing witness pipeline.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adilab/asymptotics.hpp"
#include "adilab/checks.hpp"
#include "adilab/diffpoly.hpp"
#include "adilab/errors.hpp"
#include "adilab/json_io.hpp"
#include "adilab/specfun.hpp"
#include "adilab/witness.hpp"

namespace {

using namespace adi;

struct RangeSpec {
    Rational start, stop, step;
    bool has_step = false;
};

// "a:b" or "a:b:step"; start inclusive, stop exclusive on the generated grid.
RangeSpec parse_range(const std::string& s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t c = s.find(':', pos);
        if (c == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, c - pos));
        pos = c + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw SchemaError("range must look like start:stop or start:stop:step");
    RangeSpec r;
    r.start = Rational::parse(parts[0]);
    r.stop = Rational::parse(parts[1]);
    r.step = Rational(1);
    if (parts.size() == 3) {
        r.step = Rational::parse(parts[2]);
        r.has_step = true;
    }
    if (!(r.step > Rational(0))) throw SchemaError("range step must be positive");
    if (!(r.start < r.stop)) throw SchemaError("range start must precede stop");
    return r;
}

// Largest grid point strictly below stop; the module layer works on closed intervals.
Rational closed_end(const RangeSpec& r) {
    Rational span = r.stop - r.start;
    Rational steps = span / r.step;
    mpz_class k = steps.num() / steps.den();  // floor for positive values
    if (Rational(k) * r.step == span) k -= 1;  // exclusive stop
    return r.start + Rational(k) * r.step;
}

long resolve_bits(long cli_bits) {
    if (cli_bits > 0) return cli_bits;
    if (const char* env = std::getenv("ADE_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 64) return v;
        throw SchemaError("ADE_BITS must be an integer >= 64");
    }
    return 256;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write(out_path, content);
}

int cmd_eval(const std::string& fn, const std::string& s_arg, const std::string& z_arg,
             int n, int ell, int k, int m, const PrecisionConfig& ctx, long digits) {
    const mpfr_prec_t wp = ctx.working();
    auto need = [&](const std::string& a, const char* which) {
        if (a.empty()) throw SchemaError(std::string("eval ") + fn + " needs " + which);
        return parse_complex(a, wp);
    };
    auto point = [&](const std::string& a) { return make_eval_point(need(a, "--z"), ctx); };

    if (fn == "zeta") {
        std::cout << to_string(zeta_eval(need(s_arg, "--s"), ctx), digits) << "\n";
    } else if (fn == "zeta-jet") {
        FunctionJet jet = zeta_jet(need(s_arg, "--s"), m, ctx);
        std::cout << "0: " << to_string(jet.base, digits) << "\n";
        for (int j = 1; j <= jet.order(); ++j)
            std::cout << j << ": " << to_string(jet.at(j), digits) << "\n";
    } else if (fn == "log-gamma") {
        std::cout << to_string(log_gamma(point(z_arg), ctx), digits) << "\n";
    } else if (fn == "gamma") {
        std::cout << to_string(exp(log_gamma(point(z_arg), ctx)), digits) << "\n";
    } else if (fn == "digamma-jet") {
        FunctionJet jet = digamma_jet(point(z_arg), k, ctx);
        std::cout << "0: " << to_string(jet.base, digits) << "\n";
        for (int j = 1; j <= jet.order(); ++j)
            std::cout << j << ": " << to_string(jet.at(j), digits) << "\n";
    } else if (fn == "gamma-ratio" || fn == "F") {
        auto vals = gamma_ratio_eval(point(z_arg), {n}, ctx);
        std::cout << to_string(vals[0], digits) << "\n";
    } else if (fn == "G") {
        AsymParams prm{ell, n, 64};
        std::cout << to_string(g_direct(point(z_arg), prm, ctx), digits) << "\n";
    } else if (fn == "H") {
        AsymParams prm{ell, n, 64};
        RatioBundle b = ratio_bundle(point(z_arg), prm, ctx);
        std::cout << to_string(b.h, digits) << "\n";
    } else if (fn == "epsilon") {
        std::cout << to_string(epsilon_eval(point(z_arg), n, ctx), digits) << "\n";
    } else {
        throw SchemaError("unknown eval function: " + fn);
    }
    return 0;
}

int cmd_expand(int n, bool check_cn) {
    const DiffPolynomial& p = gamma_ratio_poly(n);
    std::cout << p.text() << "\n";
    if (check_cn) {
        Rational c = extract_cn(n);
        Rational want((long)n * (n - 1) / 2);
        std::cout << "c_" << n << " = " << c.str() << " (expected " << want.str() << ")\n";
        if (c != want) return 1;
    }
    return 0;
}

int cmd_verify(const std::string& suite, const PrecisionConfig& ctx) {
    auto rows = run_check_suite(suite, ctx);
    bool all = true;
    for (auto& r : rows) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": measured " << r.measured
                  << ", target " << r.target << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "OK" : "FAILED") << " (" << rows.size() << " checks)\n";
    return all ? 0 : 1;
}

int cmd_scan(const std::string& x_arg, int m, const std::string& range_arg,
             const PrecisionConfig& ctx, long digits, const std::string& out_path) {
    RangeSpec r = parse_range(range_arg);
    Rational x = Rational::parse(x_arg);
    Rational step = r.has_step ? r.step : Rational(1, 20);
    RangeSpec rr{r.start, r.stop, step, true};
    Trajectory traj = sample_curve(x, r.start, closed_end(rr), step, m, ctx);
    emit(out_path, trajectory_csv(traj, digits));
    return 0;
}

int cmd_decompose(const std::string& path, int ell, const PrecisionConfig& ctx, long digits,
                  const std::string& out_path) {
    ADEPoly p = load_adepoly(path, ctx);
    if (ell < 2) throw regime_error_small_params();
    nlohmann::json out = decomposition_to_json(p, ell, digits);
    emit(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_witness(const std::string& path, int ell, int n, const std::string& range_arg,
                double c0, double lower, int count, double slack, const PrecisionConfig& ctx,
                long digits, const std::string& out_path) {
    ADEPoly p = load_adepoly(path, ctx);
    AsymParams prm{ell, n, 64};
    prm.validate();
    RangeSpec r = parse_range(range_arg);
    Rational step = r.has_step ? r.step : Rational(1, 2);
    RangeSpec rr{r.start, r.stop, step, true};
    WitnessConfig cfg;
    cfg.c0 = Real::of(c0, 64);
    cfg.lower = Real::of(lower, 64);
    cfg.count = count;
    cfg.slack = slack;
    IndependenceReport rep =
        independence_report(p, prm, Rational(3, 4), r.start, closed_end(rr), step, cfg, ctx);
    nlohmann::json out = independence_to_json(rep, digits);
    if (!out_path.empty()) atomic_write(out_path, out.dump(2) + "\n");
    std::cout << rep.verdict << "\n";
    if (out_path.empty() && !rep.identically_zero) std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numeric and symbolic laboratory for Gamma/zeta differential independence"};
    app.require_subcommand(1);

    long bits = 0;
    long digits = 0;
    app.add_option("--bits", bits, "working precision in bits (default 256 or ADE_BITS)");
    app.add_option("--digits", digits, "printed digits (default: full precision)");

    std::string s_arg, z_arg, fn;
    int n = 1, ell = 2, k = 0, m = 0;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one special function value");
    eval->add_option("function", fn, "zeta|zeta-jet|log-gamma|gamma|digamma-jet|gamma-ratio|F|G|H|epsilon")
        ->required();
    eval->add_option("--s", s_arg, "complex argument for zeta forms, like 0.75+40i");
    eval->add_option("--z", z_arg, "complex argument for Gamma forms");
    eval->add_option("--n", n, "derivative order");
    eval->add_option("--ell", ell, "outer order");
    eval->add_option("--k", k, "jet depth for digamma-jet");
    eval->add_option("--m", m, "jet depth for zeta-jet");

    int expand_n = 0;
    bool check_cn = false;
    CLI::App* expand = app.add_subcommand("expand", "print the n-th ratio polynomial");
    expand->add_option("n", expand_n, "index")->required();
    expand->add_flag("--check-cn", check_cn, "also verify the f^(n-2) f' coefficient");

    std::string dec_path, dec_out;
    int dec_ell = 2;
    CLI::App* dec = app.add_subcommand("decompose", "homogeneous parts and index tables");
    dec->add_option("poly", dec_path, "polynomial JSON file")->required();
    dec->add_option("--ell", dec_ell, "outer order")->required();
    dec->add_option("--out", dec_out, "write JSON here instead of stdout");

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "stirling|eq2.5|eq2.7|eq2.13|epsilon|cn|bell|zeta")
        ->required();

    std::string scan_x = "0.75", scan_range, scan_out;
    int scan_m = 0;
    CLI::App* scan = app.add_subcommand("scan", "zeta jet along a vertical line as CSV");
    scan->add_option("--x", scan_x, "abscissa in (1/2, 1)");
    scan->add_option("--m", scan_m, "jet depth");
    scan->add_option("--y", scan_range, "range start:stop[:step], stop exclusive")->required();
    scan->add_option("--out", scan_out, "write CSV here instead of stdout");

    std::string wit_path, wit_range, wit_out;
    int wit_ell = 2, wit_n = 1, wit_count = 12;
    double wit_c0 = 2.0, wit_lower = 1.0, wit_slack = 2.0;
    CLI::App* wit = app.add_subcommand("witness", "nonvanishing witness pipeline");
    wit->add_option("--poly", wit_path, "polynomial JSON file")->required();
    wit->add_option("--ell", wit_ell, "outer order")->required();
    wit->add_option("--n", wit_n, "inner order")->required();
    wit->add_option("--y", wit_range, "range start:stop[:step], stop exclusive")->required();
    wit->add_option("--c0", wit_c0, "upper bucket bound, must exceed 1");
    wit->add_option("--lower", wit_lower, "lower bucket threshold, at least 1");
    wit->add_option("--count", wit_count, "max witnesses kept");
    wit->add_option("--slack", wit_slack, "verdict slack on the dominance ratio");
    wit->add_option("--out", wit_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        PrecisionConfig ctx = make_precision(resolve_bits(bits));
        if (eval->parsed()) return cmd_eval(fn, s_arg, z_arg, n, ell, k, m, ctx, digits);
        if (expand->parsed()) return cmd_expand(expand_n, check_cn);
        if (dec->parsed()) return cmd_decompose(dec_path, dec_ell, ctx, digits, dec_out);
        if (verify->parsed()) return cmd_verify(suite, ctx);
        if (scan->parsed()) return cmd_scan(scan_x, scan_m, scan_range, ctx, digits, scan_out);
        if (wit->parsed())
            return cmd_witness(wit_path, wit_ell, wit_n, wit_range, wit_c0, wit_lower, wit_count,
                               wit_slack, ctx, digits, wit_out);
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error [" << e.guard() << "]: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
