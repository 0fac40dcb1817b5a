#include "bfkpp/shooting.hpp"

#include "bfkpp/asymptotics.hpp"
#include "bfkpp/ode.hpp"
#include "bfkpp/rootfind.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bfkpp::shooting {

using model::CutoffVariant;
using model::ModelParams;
using model::PhaseState;

model::PhaseState unstable_seed(double k, double c, double delta) {
    const auto eig = model::equilibria_eigen({1.0, 0.0}, k, c);
    const auto& unstable = eig.pairs[1];  // ascending order; det J = -1
    if (!(eig.pairs[0].lambda < 0.0 && unstable.lambda > 0.0))
        throw std::domain_error("unstable_seed: Q- is not a saddle for these parameters");
    Eigen::Vector2d dir = unstable.v;
    if (dir[1] > 0.0) dir = -dir;  // into {U < 1, V < 0}
    return {1.0 + delta * dir[0], delta * dir[1]};
}

namespace {

ode::StepControl step_control(const IntegratorConfig& cfg) {
    ode::StepControl ctrl;
    ctrl.rel_tol = cfg.rel_tol;
    ctrl.abs_tol = cfg.abs_tol;
    ctrl.max_steps = cfg.max_steps;
    ctrl.h_init = 1e-6;
    ctrl.h_max = 1.0;
    return ctrl;
}

// Integrate the no-cut-off field from the unstable seed to the event
// {U = u_stop}; shared by the cut-off shot and the variational oracle.
std::pair<PhaseState, OrbitTrace> shoot_to(double u_stop, double k, double c,
                                           const IntegratorConfig& cfg, bool want_trace) {
    const ModelParams outer{k, 0.0, CutoffVariant::NoCutoff};
    const PhaseState seed = unstable_seed(k, c, cfg.seed_offset);

    auto rhs = [&](double, const Eigen::Vector2d& y) {
        const PhaseState d = model::vector_field({y[0], y[1]}, outer, c);
        return Eigen::Vector2d(d.U, d.V);
    };
    auto event = [&](double, const Eigen::Vector2d& y) { return y[0] - u_stop; };

    std::vector<std::pair<double, Eigen::Vector2d>> raw;
    const auto res = ode::integrate_to_event<2>(rhs, event, 0.0, seed.vec(), step_control(cfg),
                                                cfg.event_tol, want_trace ? &raw : nullptr);
    if (!res.event_hit) {
        std::ostringstream msg;
        msg << "integrate_to_cutoff: U did not reach " << u_stop << " within " << res.steps
            << " steps; last state (xi, U, V) = (" << res.t << ", " << res.y[0] << ", "
            << res.y[1] << ")";
        throw ode::IntegrationError(msg.str());
    }

    OrbitTrace trace;
    trace.rows.reserve(raw.size());
    for (const auto& [xi, y] : raw) trace.rows.push_back({xi, y[0], y[1]});
    return {PhaseState::from(res.y), std::move(trace)};
}

}  // namespace

std::pair<PhaseState, OrbitTrace> integrate_to_cutoff(const ModelParams& p, double c,
                                                      const IntegratorConfig& cfg) {
    if (!(p.eps > 0.0)) throw std::domain_error("integrate_to_cutoff: requires eps > 0");
    return shoot_to(p.eps, p.k, c, cfg, true);
}

double matching_residual(double c, const ModelParams& p, const IntegratorConfig& cfg) {
    const PhaseState out = shoot_to(p.eps, p.k, c, cfg, false).first;
    return out.V - model::inner_manifold_V(p.eps, p, c);
}

SpeedResult solve_speed(const ModelParams& p, const IntegratorConfig& cfg) {
    if (p.variant != CutoffVariant::CutBoth && p.variant != CutoffVariant::CutReactionOnly)
        throw std::domain_error("solve_speed: supports CutBoth and CutReactionOnly only");
    if (!(p.eps > 0.0 && p.eps < 1.0))
        throw std::domain_error("solve_speed: requires eps in (0,1)");

    const double c0 = model::c_crit(p.k);
    const double dc_est = asymptotics::speed_correction(p.eps, p.k).delta_c;
    const double c_lo = std::max(asymptotics::c_hat(p.eps, p.k) - 10.0 * dc_est, 0.05);
    const double c_hi = c0;

    auto f = [&](double c) { return matching_residual(c, p, cfg); };
    rootfind::RootResult r;
    try {
        r = rootfind::brent(f, c_lo, c_hi, 1e-12, 1e-13);
    } catch (const rootfind::BracketError& e) {
        std::ostringstream msg;
        msg << "solve_speed: bracket failure on [" << c_lo << ", " << c_hi
            << "]; residuals " << e.fa << " and " << e.fb;
        throw std::runtime_error(msg.str());
    }

    SpeedResult out;
    out.c = r.x;
    out.residual = r.fx;
    out.bracket = {c_lo, c_hi};
    out.iterations = r.iterations;
    out.variant = p.variant;
    return out;
}

double dVdc_fd(double U_target, double k, double h, const IntegratorConfig& cfg) {
    if (!(U_target > 0.0 && U_target < 1.0))
        throw std::domain_error("dVdc_fd: requires U_target in (0,1)");
    if (!(h > 0.0 && h <= 1e-4)) throw std::domain_error("dVdc_fd: requires 0 < h <= 1e-4");
    const double c0 = model::c_crit(k);
    const double v_plus = shoot_to(U_target, k, c0 + h, cfg, false).first.V;
    const double v_minus = shoot_to(U_target, k, c0 - h, cfg, false).first.V;
    return (v_plus - v_minus) / (2.0 * h);
}

OrbitTrace front_profile(const ModelParams& p, double c, double xi_span,
                         const IntegratorConfig& cfg) {
    OrbitTrace trace;
    if (p.variant == CutoffVariant::NoCutoff || p.eps <= 0.0) {
        // no inner region: outer orbit down to a small floor
        auto [end, outer] = shoot_to(1e-9, p.k, c, cfg, true);
        (void)end;
        return outer;
    }

    auto [cross, outer] = integrate_to_cutoff(p, c, cfg);
    trace = std::move(outer);
    const double xi_eps = trace.rows.empty() ? 0.0 : trace.rows.back().xi;

    // Closed-form inner tail from the stable manifold V(U); xi recovered from
    // dU/dxi = V(U). CutBoth / BurgersCutAdvection: U = eps exp(-c (xi - xi_eps)).
    // CutReactionOnly: dU/dxi = -cU + (k/2)U^2, integrated exactly.
    const int n_tail = 200;
    const double xi_end = xi_span;
    if (xi_end <= xi_eps) return trace;  // no room for an inner tail
    for (int i = 1; i <= n_tail; ++i) {
        const double xi = xi_eps + (xi_end - xi_eps) * i / n_tail;
        double U;
        if (p.variant == CutoffVariant::CutReactionOnly) {
            // solution of the logistic-type tail with U(xi_eps) = eps
            const double e = std::exp(-c * (xi - xi_eps));
            U = c * p.eps * e / (c - 0.5 * p.k * p.eps * (1.0 - e));
        } else {
            U = p.eps * std::exp(-c * (xi - xi_eps));
        }
        trace.rows.push_back({xi, U, model::inner_manifold_V(U, p, c)});
    }
    return trace;
}

}  // namespace bfkpp::shooting
