// Command-line front end: single-speed queries, eps-sweeps with log-log
// slope fits, orbit and profile dumps, closed-form asymptotics, and the
// built-in verification suite.
//
// Exit codes: 0 success, 1 partial data failure (failed sweep rows or
// failed verify checks), 2 usage or solver error.

#include "bfkpp/asymptotics.hpp"
#include "bfkpp/charts.hpp"
#include "bfkpp/model.hpp"
#include "bfkpp/shooting.hpp"
#include "bfkpp/sweep.hpp"
#include "bfkpp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::json;
using namespace bfkpp;

struct Defaults {
    double k = 4.0;
    double eps = 1e-3;
    double eps_min = 1e-4;
    double eps_max = 1e-2;
    int points = 12;
    std::string variant = "cut-both";
    shooting::IntegratorConfig integ;
};

// Config precedence: CLI flags > JSON config file > built-in defaults.
Defaults load_config(const std::string& path) {
    Defaults d;
    if (path.empty()) return d;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json j = json::parse(in);
    if (j.contains("k")) d.k = j["k"].get<double>();
    if (j.contains("eps")) d.eps = j["eps"].get<double>();
    if (j.contains("eps_min")) d.eps_min = j["eps_min"].get<double>();
    if (j.contains("eps_max")) d.eps_max = j["eps_max"].get<double>();
    if (j.contains("points")) d.points = j["points"].get<int>();
    if (j.contains("variant")) d.variant = j["variant"].get<std::string>();
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("rel")) d.integ.rel_tol = t["rel"].get<double>();
        if (t.contains("abs")) d.integ.abs_tol = t["abs"].get<double>();
        if (t.contains("event")) d.integ.event_tol = t["event"].get<double>();
    }
    if (j.contains("seed_offset")) d.integ.seed_offset = j["seed_offset"].get<double>();
    return d;
}

json config_json(const Defaults& d) {
    return json{{"k", d.k},
                {"eps", d.eps},
                {"eps_min", d.eps_min},
                {"eps_max", d.eps_max},
                {"points", d.points},
                {"variant", d.variant},
                {"tolerances",
                 {{"rel", d.integ.rel_tol}, {"abs", d.integ.abs_tol}, {"event", d.integ.event_tol}}},
                {"seed_offset", d.integ.seed_offset}};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

int cmd_speed(double k, double eps, const std::string& variant_name, bool as_json,
              const std::string& out_path, const shooting::IntegratorConfig& integ) {
    const auto variant = model::variant_from_string(variant_name);
    json rep;
    std::ostringstream text;

    rep["k"] = k;
    rep["eps"] = eps;
    rep["variant"] = variant_name;

    if (variant == model::CutoffVariant::BurgersCutAdvection) {
        const double c = model::burgers_speed(eps, k);
        rep["c"] = c;
        rep["c_base"] = 0.5 * k;
        rep["delta_c"] = 0.5 * k - c;
        text << "variant      " << variant_name << "\n"
             << "c(eps)       " << num(c) << "  (closed form)\n"
             << "c(0)         " << num(0.5 * k) << "\n"
             << "delta_c      " << num(0.5 * k - c) << "\n";
        write_output(out_path, as_json ? rep.dump(2) + "\n" : text.str());
        return 0;
    }

    const double c0 = model::c_crit(k);
    const bool pulled = k <= 2.0;
    rep["c_crit"] = c0;
    rep["regime"] = pulled ? "pulled" : "pushed";

    if (eps == 0.0) {
        rep["c"] = c0;
        rep["c_hat"] = c0;
        rep["delta_c"] = 0.0;
        text << "regime       " << (pulled ? "pulled" : "pushed") << "\n"
             << "c(0)         " << num(c0) << "  (no cut-off)\n"
             << "delta_c      " << num(0.0) << "\n";
        write_output(out_path, as_json ? rep.dump(2) + "\n" : text.str());
        return 0;
    }

    const double chat = asymptotics::c_hat(eps, k);
    model::ModelParams p{k, eps, variant};
    shooting::SpeedResult sr;
    try {
        sr = shooting::solve_speed(p, integ);
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    }
    rep["c"] = sr.c;
    rep["c_hat"] = chat;
    rep["delta_c"] = c0 - sr.c;
    rep["abs_dev_from_hat"] = std::abs(sr.c - chat);
    rep["solver"] = {{"residual", sr.residual},
                     {"bracket", {sr.bracket.first, sr.bracket.second}},
                     {"iterations", sr.iterations}};

    text << "regime       " << (pulled ? "pulled" : "pushed") << "\n"
         << "c(eps)       " << num(sr.c) << "  (shooting)\n"
         << "c_hat(eps)   " << num(chat) << "  (leading asymptotic)\n"
         << "c_crit       " << num(c0) << "\n"
         << "delta_c      " << num(c0 - sr.c) << "\n"
         << "|c - c_hat|  " << num(std::abs(sr.c - chat)) << "\n"
         << "residual     " << num(sr.residual) << "  in [" << num(sr.bracket.first) << ", "
         << num(sr.bracket.second) << "], " << sr.iterations << " iterations\n";
    write_output(out_path, as_json ? rep.dump(2) + "\n" : text.str());
    return 0;
}

int cmd_sweep(const sweep::SweepSpec& spec, bool as_json, bool plot_script,
              const shooting::IntegratorConfig& integ) {
    const auto res = sweep::run_sweep(spec, integ);
    const std::string csv = sweep::to_csv(res);

    json rep;
    std::ostringstream text;
    rep["k"] = spec.k;

    auto report_fit = [&](const char* label, sweep::ErrColumn col) {
        try {
            const auto fit = sweep::fit_error_slope(res, col);
            rep["fits"][label] = {{"slope", fit.slope},
                                  {"intercept", fit.intercept},
                                  {"r_squared", fit.r_squared},
                                  {"n", fit.n}};
            text << label << ": slope " << fit.slope << ", intercept " << fit.intercept
                 << ", r^2 " << fit.r_squared << " (" << fit.n << " points)\n";
        } catch (const std::exception&) {
            // not enough valid rows for this column
        }
    };

    write_output(spec.output_path, csv);
    const bool csv_to_file = !spec.output_path.empty() && spec.output_path != "-";
    if (plot_script && csv_to_file) {
        write_output(spec.output_path + ".gnuplot",
                     sweep::gnuplot_script(res, spec.output_path));
    }

    report_fit("ln|c - c_hat| vs ln eps", sweep::ErrColumn::AbsErr);
    report_fit("ln(c_crit - c) vs ln eps", sweep::ErrColumn::CCritMinusC);
    report_fit("ln|c - gamma| vs ln eps", sweep::ErrColumn::CMinusGamma);

    for (const auto& row : res.rows)
        if (!row.error.empty()) {
            rep["row_errors"][num(row.eps)] = row.error;
            text << "row eps=" << num(row.eps) << " FAILED: " << row.error << "\n";
        }

    // fits and errors go to stderr when the CSV went to stdout
    std::ostream& meta = csv_to_file ? std::cout : std::cerr;
    meta << (as_json ? rep.dump(2) + "\n" : text.str());
    return res.any_failed ? 1 : 0;
}

int cmd_orbit(double k, const std::string& c_arg, double eps, const std::string& piece,
              int samples, bool as_json, const std::string& out_path,
              const shooting::IntegratorConfig& integ) {
    std::vector<std::array<double, 3>> rows;

    if (piece == "phase") {
        const double c = (c_arg == "crit") ? model::c_crit(k) : std::stod(c_arg);
        model::ModelParams p{k, eps, eps > 0.0 ? model::CutoffVariant::CutBoth
                                               : model::CutoffVariant::NoCutoff};
        const auto trace = shooting::front_profile(p, c, 0.0, integ);
        for (const auto& row : trace.rows) rows.push_back({row.xi, row.U, row.V});
    } else {
        const auto orb = charts::singular_orbit(k, samples);
        bool found = false;
        for (const auto& pc : orb.pieces) {
            if (pc.name != piece) continue;
            found = true;
            for (const auto& q : pc.samples) {
                if (q.chart == charts::Chart::K2)
                    rows.push_back({q.u2(), q.v2(), q.r2()});
                else if (pc.name == "gamma1-plus")
                    rows.push_back({q.eps1(), q.v1(), q.r1()});
                else
                    rows.push_back({q.r1(), q.v1(), q.eps1()});
            }
        }
        if (!found) {
            std::cerr << "unknown orbit piece: " << piece
                      << " (expected gamma2, gamma1-plus, gamma1-minus, or phase)\n";
            return 2;
        }
    }

    if (as_json) {
        json rep;
        rep["k"] = k;
        rep["piece"] = piece;
        rep["columns"] = {"param", "coord1", "coord2"};
        rep["rows"] = rows;
        write_output(out_path, rep.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "param,coord1,coord2\n";
    for (const auto& r : rows) out << num(r[0]) << ',' << num(r[1]) << ',' << num(r[2]) << "\n";
    write_output(out_path, out.str());
    return 0;
}

int cmd_asym(double k, double eps, std::optional<double> r0, bool want_root, bool as_json,
             const std::string& out_path) {
    json rep;
    std::ostringstream text;
    const double c0 = model::c_crit(k);
    rep["k"] = k;
    rep["c_crit"] = c0;
    rep["regime"] = (k <= 2.0) ? "pulled" : "pushed";
    text << "c_crit            " << num(c0) << "\n"
         << "regime            " << (k <= 2.0 ? "pulled" : "pushed") << "\n";

    if (eps > 0.0 && eps < 1.0) {
        if (k <= 2.0) {
            const double dc = asymptotics::delta_c_pulled(eps);
            rep["delta_c_pulled"] = dc;
            text << "delta_c (pulled)  " << num(dc) << "\n";
        } else {
            const double dc = asymptotics::delta_c_pushed(eps, k);
            rep["delta_c_pushed"] = dc;
            text << "delta_c (pushed)  " << num(dc) << "\n";
        }
        rep["c_hat"] = asymptotics::c_hat(eps, k);
        text << "c_hat             " << num(asymptotics::c_hat(eps, k)) << "\n";
    }

    if (k > 2.0) {
        const double q = 4.0 / (k * k);
        rep["alpha"] = asymptotics::alpha_limit(k);
        rep["exponent"] = 1.0 - q;
        rep["kappa"] = asymptotics::kappa_exponent(k);
        rep["delta_r0_limit"] = asymptotics::delta_r0_limit(k);
        text << "alpha(k)          " << num(asymptotics::alpha_limit(k)) << "\n"
             << "exponent 1-4/k^2  " << num(1.0 - q) << "\n"
             << "kappa(k)          " << num(asymptotics::kappa_exponent(k)) << "\n"
             << "delta(r0->0)      " << num(asymptotics::delta_r0_limit(k)) << "\n";
        if (r0) {
            rep["nu"] = asymptotics::nu(*r0, k);
            rep["delta_r0"] = asymptotics::delta_r0(*r0, k);
            text << "nu(r0)            " << num(asymptotics::nu(*r0, k)) << "\n"
                 << "delta(r0)         " << num(asymptotics::delta_r0(*r0, k)) << "\n";
        }
        if (want_root) {
            if (!r0 || !(eps > 0.0)) {
                std::cerr << "--normal-form-root needs --eps and --r0\n";
                return 2;
            }
            const double root = asymptotics::delta_c_normal_form_root(eps, *r0, k);
            rep["delta_c_normal_form_root"] = root;
            rep["root_over_closed_form"] = root / asymptotics::delta_c_pushed(eps, k);
            text << "normal-form root  " << num(root) << "  (ratio to closed form "
                 << num(root / asymptotics::delta_c_pushed(eps, k)) << ")\n";
        }
    } else {
        text << "pushed quantities n/a (k <= 2)\n";
        rep["pushed"] = nullptr;
    }
    write_output(out_path, as_json ? rep.dump(2) + "\n" : text.str());
    return 0;
}

int cmd_verify(const std::string& level, bool as_json, const std::string& out_path) {
    const auto lvl = (level == "full") ? verify::Level::Full : verify::Level::Fast;
    const auto results = verify::run_checks(lvl);

    json rep = json::array();
    std::ostringstream text;
    int failures = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failures;
        rep.push_back({{"module", r.module},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"observed", r.observed},
                       {"bound", r.bound},
                       {"detail", r.detail}});
        text << (r.passed ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.name
             << "  (observed " << r.observed << ", bound " << r.bound << ")";
        if (!r.detail.empty()) text << "  -- " << r.detail;
        text << "\n";
    }
    text << failures << " of " << results.size() << " checks failed\n";
    write_output(out_path, as_json ? rep.dump(2) + "\n" : text.str());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    // pre-scan for --config so its values become the option defaults
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];

    Defaults defs;
    try {
        defs = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Front-speed laboratory for the cut-off Burgers-FKPP equation"};
    app.require_subcommand(0, 1);
    std::string config_opt;
    bool show_config = false;
    app.add_option("--config", config_opt, "JSON config file (defaults for all flags)");
    app.add_flag("--show-config", show_config, "print the effective configuration and exit");

    double k = defs.k, eps = defs.eps;
    std::string variant = defs.variant, out_path = "-";
    bool as_json = false;
    auto integ = defs.integ;

    auto add_common = [&](CLI::App* cmd, bool with_eps = true) {
        cmd->fallthrough();  // let --config / --show-config appear after the subcommand
        cmd->add_option("--k", k, "advection strength k >= 0")->capture_default_str();
        if (with_eps)
            cmd->add_option("--eps", eps, "cut-off parameter in [0,1)")->capture_default_str();
        cmd->add_option("--out", out_path, "output path, '-' for stdout")->capture_default_str();
        cmd->add_flag("--json", as_json, "machine-readable report");
        cmd->add_option("--rel-tol", integ.rel_tol, "integrator relative tolerance");
        cmd->add_option("--abs-tol", integ.abs_tol, "integrator absolute tolerance");
        cmd->add_option("--event-tol", integ.event_tol, "|U - eps| tolerance at the crossing");
        cmd->add_option("--seed-offset", integ.seed_offset, "offset along the unstable eigenvector");
    };

    auto* speed = app.add_subcommand("speed", "compute c(eps) by shooting");
    add_common(speed);
    speed->add_option("--variant", variant, "cut-both | cut-reaction-only | burgers-cut-advection")
        ->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "log-spaced eps sweep with slope fits");
    sw->fallthrough();
    sweep::SweepSpec spec;
    spec.k = defs.k;
    spec.eps_min = defs.eps_min;
    spec.eps_max = defs.eps_max;
    spec.points = defs.points;
    bool compare_gamma = false, plot_script = false;
    sw->add_option("--k", spec.k, "advection strength")->capture_default_str();
    sw->add_option("--eps-min", spec.eps_min, "smallest eps")->capture_default_str();
    sw->add_option("--eps-max", spec.eps_max, "largest eps")->capture_default_str();
    sw->add_option("--points", spec.points, "number of log-spaced points")->capture_default_str();
    sw->add_option("--out", spec.output_path, "CSV path, '-' for stdout");
    sw->add_flag("--compare", compare_gamma, "also solve the reaction-only variant (gamma)");
    sw->add_flag("--plot-script", plot_script, "emit a gnuplot script next to the CSV");
    sw->add_flag("--json", as_json, "machine-readable fit report");
    sw->add_option("--rel-tol", integ.rel_tol, "integrator relative tolerance");
    sw->add_option("--abs-tol", integ.abs_tol, "integrator absolute tolerance");
    sw->add_option("--event-tol", integ.event_tol, "event tolerance");
    sw->add_option("--seed-offset", integ.seed_offset, "seed offset");

    auto* orbit = app.add_subcommand("orbit", "dump an orbit or singular-orbit piece as CSV");
    std::string piece = "phase", c_arg = "crit";
    int samples = 200;
    add_common(orbit);
    orbit->add_option("--piece", piece, "gamma2 | gamma1-plus | gamma1-minus | phase")
        ->capture_default_str();
    orbit->add_option("--c", c_arg, "speed: numeric value or 'crit'")->capture_default_str();
    orbit->add_option("--samples", samples, "samples per piece")->capture_default_str();

    auto* asym = app.add_subcommand("asym", "closed-form asymptotic quantities");
    std::optional<double> r0;
    bool want_root = false;
    add_common(asym);
    asym->add_option("--r0", r0, "entry-section radius r0 in (0,1)");
    asym->add_flag("--normal-form-root", want_root,
                   "solve the transcendental normal-form relation for delta_c");

    auto* ver = app.add_subcommand("verify", "run the invariant self-checks");
    ver->fallthrough();
    std::string level = "fast";
    ver->add_option("--level", level, "fast | full")->capture_default_str();
    ver->add_option("--out", out_path, "output path, '-' for stdout");
    ver->add_flag("--json", as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (show_config) {
        Defaults effective = defs;
        effective.k = k;
        effective.eps = eps;
        effective.eps_min = spec.eps_min;
        effective.eps_max = spec.eps_max;
        effective.points = spec.points;
        effective.variant = variant;
        effective.integ = integ;
        std::cout << config_json(effective).dump(2) << "\n";
        return 0;
    }

    try {
        if (speed->parsed()) return cmd_speed(k, eps, variant, as_json, out_path, integ);
        if (sw->parsed()) {
            spec.variants = {model::CutoffVariant::CutBoth};
            if (compare_gamma) spec.variants.push_back(model::CutoffVariant::CutReactionOnly);
            return cmd_sweep(spec, as_json, plot_script, integ);
        }
        if (orbit->parsed())
            return cmd_orbit(k, c_arg, eps, piece, samples, as_json, out_path, integ);
        if (asym->parsed()) return cmd_asym(k, eps, r0, want_root, as_json, out_path);
        if (ver->parsed()) return cmd_verify(level, as_json, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << app.help();
    return 0;
}
