#include "bfkpp/sweep.hpp"

#include "bfkpp/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bfkpp::sweep {

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need matching samples, at least 2");
    const int n = static_cast<int>(x.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        A(i, 0) = x[i];
        A(i, 1) = 1.0;
        b(i) = y[i];
    }
    const Eigen::Vector2d sol = A.colPivHouseholderQr().solve(b);

    const double mean = b.mean();
    const double ss_tot = (b.array() - mean).square().sum();
    const double ss_res = (A * sol - b).squaredNorm();
    SlopeFit fit;
    fit.slope = sol[0];
    fit.intercept = sol[1];
    fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    fit.n = n;
    return fit;
}

std::vector<double> log_grid(double eps_min, double eps_max, int points) {
    if (!(eps_min > 0.0 && eps_min < eps_max && eps_max < 1.0))
        throw std::invalid_argument("log_grid: requires 0 < eps_min < eps_max < 1");
    if (points < 2) throw std::invalid_argument("log_grid: requires points >= 2");
    std::vector<double> g(points);
    const double l0 = std::log(eps_min), l1 = std::log(eps_max);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    g.front() = eps_min;
    g.back() = eps_max;
    return g;
}

SweepResult run_sweep(const SweepSpec& spec, const shooting::IntegratorConfig& cfg) {
    SweepResult res;
    res.spec = spec;
    const auto grid = log_grid(spec.eps_min, spec.eps_max, spec.points);

    const bool want_both = std::count(spec.variants.begin(), spec.variants.end(),
                                      model::CutoffVariant::CutBoth) > 0;
    const bool want_gamma = std::count(spec.variants.begin(), spec.variants.end(),
                                       model::CutoffVariant::CutReactionOnly) > 0;

    for (const double eps : grid) {
        SweepRow row;
        row.eps = eps;
        try {
            row.c_asymptotic = asymptotics::c_hat(eps, spec.k);
            if (want_both) {
                model::ModelParams p{spec.k, eps, model::CutoffVariant::CutBoth};
                row.c_numeric = shooting::solve_speed(p, cfg).c;
                row.abs_err = std::abs(*row.c_numeric - *row.c_asymptotic);
            }
            if (want_gamma) {
                model::ModelParams p{spec.k, eps, model::CutoffVariant::CutReactionOnly};
                row.gamma_numeric = shooting::solve_speed(p, cfg).c;
                if (row.c_numeric) row.c_minus_gamma = *row.c_numeric - *row.gamma_numeric;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            res.any_failed = true;
        }
        res.rows.push_back(row);
    }
    return res;
}

SlopeFit fit_error_slope(const SweepResult& res, ErrColumn col) {
    std::vector<double> x, y;
    const double c0 = model::c_crit(res.spec.k);
    for (const auto& row : res.rows) {
        std::optional<double> v;
        switch (col) {
            case ErrColumn::AbsErr:
                v = row.abs_err;
                break;
            case ErrColumn::CCritMinusC:
                if (row.c_numeric) v = c0 - *row.c_numeric;
                break;
            case ErrColumn::CMinusGamma:
                v = row.c_minus_gamma;
                break;
        }
        if (!v || *v == 0.0 || !std::isfinite(*v)) continue;
        x.push_back(std::log(row.eps));
        y.push_back(std::log(std::abs(*v)));
    }
    return fit_line(x, y);
}

namespace {

std::string fmt(const std::optional<double>& v) {
    if (!v) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", *v);
    return buf;
}

}  // namespace

std::string to_csv(const SweepResult& res) {
    const bool with_gamma =
        std::count(res.spec.variants.begin(), res.spec.variants.end(),
                   model::CutoffVariant::CutReactionOnly) > 0;
    std::ostringstream out;
    out << "eps,c_numeric,c_asymptotic,abs_err";
    if (with_gamma) out << ",gamma_numeric,c_minus_gamma";
    out << "\n";
    for (const auto& row : res.rows) {
        out << fmt(row.eps) << ',' << fmt(row.c_numeric) << ',' << fmt(row.c_asymptotic) << ','
            << fmt(row.abs_err);
        if (with_gamma) out << ',' << fmt(row.gamma_numeric) << ',' << fmt(row.c_minus_gamma);
        out << "\n";
    }
    return out.str();
}

std::string gnuplot_script(const SweepResult& res, const std::string& csv_path) {
    const bool with_gamma =
        std::count(res.spec.variants.begin(), res.spec.variants.end(),
                   model::CutoffVariant::CutReactionOnly) > 0;
    std::ostringstream out;
    out << "set logscale xy\n"
        << "set datafile separator ','\n"
        << "set xlabel 'eps'\n"
        << "set ylabel 'error'\n"
        << "set key left top\n"
        << "plot '" << csv_path << "' using 1:4 skip 1 with linespoints title '|c - c_hat|'";
    if (with_gamma)
        out << ", \\\n     '" << csv_path
            << "' using 1:(abs($6)) skip 1 with linespoints title '|c - gamma|'";
    out << "\n";
    return out.str();
}

}  // namespace bfkpp::sweep
