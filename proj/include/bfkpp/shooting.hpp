#ifndef BFKPP_SHOOTING_HPP
#define BFKPP_SHOOTING_HPP

#include "bfkpp/model.hpp"

#include <utility>
#include <vector>

// Numerical front-speed computation: the unstable manifold of Q- = (1,0) is
// integrated to the cut-off line {U = eps} and matched against the exactly
// known inner stable manifold; the unique speed with vanishing mismatch is
// c(eps) (gamma(eps) for the reaction-only variant).

namespace bfkpp::shooting {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 1000000;
    double event_tol = 1e-12;    // |U - eps| at the crossing
    double seed_offset = 1e-8;   // distance along the unstable eigenvector
};

struct SpeedResult {
    double c = 0.0;
    double residual = 0.0;                 // V_out - V_in at convergence
    std::pair<double, double> bracket{0.0, 0.0};
    int iterations = 0;
    model::CutoffVariant variant = model::CutoffVariant::CutBoth;
};

// Ordered samples (xi, U, V) along an integrated or reconstructed orbit;
// U is strictly decreasing on front interiors.
struct OrbitTrace {
    struct Row {
        double xi, U, V;
    };
    std::vector<Row> rows;
};

// Point at distance delta from Q- along the unit unstable eigenvector,
// oriented into {U < 1, V < 0}. Q- is a saddle for every (k, c) since the
// Jacobian determinant there is -1.
model::PhaseState unstable_seed(double k, double c, double delta);

// Integrate the outer (no cut-off) field from unstable_seed until U = eps;
// returns the crossing state (V there is V_out) and the trace. Throws on
// step exhaustion or a missed event, reporting the last state.
std::pair<model::PhaseState, OrbitTrace> integrate_to_cutoff(const model::ModelParams& p, double c,
                                                             const IntegratorConfig& cfg = {});

// V_out(c, eps) - V_in(c, eps); zero exactly at the connection speed, and
// strictly increasing in c near c_crit.
double matching_residual(double c, const model::ModelParams& p,
                         const IntegratorConfig& cfg = {});

// The unique c with matching_residual(c) = 0, bracketed by
// [c_hat - 10 Delta_c_est, c_crit] and polished by Brent's method.
// Supports CutBoth and CutReactionOnly.
SpeedResult solve_speed(const model::ModelParams& p, const IntegratorConfig& cfg = {});

// Central finite difference of V(c, U_target) about c = c_crit(k) with the
// cut-off disabled; an independent oracle for the variational derivative.
double dVdc_fd(double U_target, double k, double h = 1e-5,
               const IntegratorConfig& cfg = {});

// Full front profile over xi in [0, xi_span]: the outer numerical orbit
// stitched at U = eps to the closed-form inner tail (V and U continuous).
OrbitTrace front_profile(const model::ModelParams& p, double c, double xi_span,
                         const IntegratorConfig& cfg = {});

}  // namespace bfkpp::shooting

#endif
