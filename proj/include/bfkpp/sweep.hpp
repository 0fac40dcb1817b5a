#ifndef BFKPP_SWEEP_HPP
#define BFKPP_SWEEP_HPP

#include "bfkpp/model.hpp"
#include "bfkpp/shooting.hpp"

#include <optional>
#include <string>
#include <vector>

// Log-spaced epsilon sweeps of the computed speed against its leading-order
// asymptotic, plus the least-squares slope fits on doubly logarithmic axes
// used to read off convergence orders.

namespace bfkpp::sweep {

struct SweepSpec {
    double k = 4.0;
    double eps_min = 1e-4;
    double eps_max = 1e-2;
    int points = 12;  // >= 2, log-spaced
    std::vector<model::CutoffVariant> variants{model::CutoffVariant::CutBoth};
    std::string output_path;  // "-" or empty for stdout
};

struct SweepRow {
    double eps = 0.0;
    std::optional<double> c_numeric;      // CutBoth speed
    std::optional<double> c_asymptotic;   // c_hat
    std::optional<double> abs_err;        // |c_numeric - c_asymptotic|
    std::optional<double> gamma_numeric;  // CutReactionOnly speed, when requested
    std::optional<double> c_minus_gamma;
    std::string error;  // non-empty if this row failed
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n = 0;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    bool any_failed = false;
};

// Least squares of y against x (used on (ln eps, ln |err|) pairs).
SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Log-spaced grid from eps_min to eps_max, ascending.
std::vector<double> log_grid(double eps_min, double eps_max, int points);

// Run the sweep; per-row failures are captured, not thrown.
SweepResult run_sweep(const SweepSpec& spec, const shooting::IntegratorConfig& cfg = {});

// Slope of ln|<column>| vs ln eps over the sweep rows; rows with missing or
// zero values are skipped.
enum class ErrColumn { AbsErr, CCritMinusC, CMinusGamma };
SlopeFit fit_error_slope(const SweepResult& res, ErrColumn col);

// CSV with header eps,c_numeric,c_asymptotic,abs_err[,gamma_numeric,c_minus_gamma];
// %.15e formatting, LF line endings, empty fields for failed rows.
std::string to_csv(const SweepResult& res);

// Companion gnuplot script plotting the error columns of the CSV.
std::string gnuplot_script(const SweepResult& res, const std::string& csv_path);

}  // namespace bfkpp::sweep

#endif
