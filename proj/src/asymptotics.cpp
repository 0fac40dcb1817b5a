#include "bfkpp/asymptotics.hpp"

#include "bfkpp/rootfind.hpp"
#include "bfkpp/specfn.hpp"

#include <cmath>
#include <stdexcept>

namespace bfkpp::asymptotics {

double delta_c_pulled(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("delta_c_pulled: requires eps in (0,1)");
    const double l = std::log(eps);
    return M_PI * M_PI / (l * l);
}

double alpha_limit(double k) {
    if (!(k > 2.0)) throw std::domain_error("alpha_limit: requires k > 2");
    const double q = 4.0 / (k * k);
    const double gg = specfn::gamma_fn(1.0 + q) * specfn::gamma_fn(1.0 - q);
    return 2.0 / std::pow(k, 1.0 + 2.0 * q) * std::pow(k * k - 4.0, q) / gg;
}

double delta_c_pushed(double eps, double k) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("delta_c_pushed: requires eps in (0,1)");
    const double q = 4.0 / (k * k);
    return alpha_limit(k) * std::pow(eps, 1.0 - q);
}

SpeedCorrection speed_correction(double eps, double k) {
    SpeedCorrection sc;
    sc.regime = regime_of(k);
    if (sc.regime == Regime::Pulled) {
        sc.delta_c = delta_c_pulled(eps);
        sc.leading_exponent = 0.0;
    } else {
        sc.delta_c = delta_c_pushed(eps, k);
        sc.leading_exponent = 1.0 - 4.0 / (k * k);
    }
    return sc;
}

double c_hat(double eps, double k) {
    if (eps == 0.0) return model::c_crit(k);
    return model::c_crit(k) - speed_correction(eps, k).delta_c;
}

double nu(double r0, double k) {
    if (!(r0 > 0.0 && r0 < 1.0)) throw std::domain_error("nu: requires r0 in (0,1)");
    if (!(k > 2.0)) throw std::domain_error("nu: requires k > 2");
    const double q = 4.0 / (k * k);
    const double f = specfn::hyp2f1_via_beta(1.0 + q, q, 2.0 + q, 1.0 - r0);
    return k * k / (k * k + 4.0) * std::pow(r0, q - 1.0) * (1.0 - r0) * f;
}

double delta_r0(double r0, double k) {
    const double q = 4.0 / (k * k);
    return std::pow(r0, 1.0 - q) * ((k * k - 4.0) * nu(r0, k) - k * k);
}

double delta_r0_limit(double k) {
    if (!(k > 2.0)) throw std::domain_error("delta_r0_limit: requires k > 2");
    const double q = 4.0 / (k * k);
    return (k * k - 4.0) * specfn::gamma_fn(1.0 + q) * specfn::gamma_fn(1.0 - q);
}

double dVdc_at_ccrit(double U, double k) {
    if (!(U > 0.0 && U < 1.0)) throw std::domain_error("dVdc_at_ccrit: requires U in (0,1)");
    if (!(k >= 2.0)) throw std::domain_error("dVdc_at_ccrit: requires k >= 2");
    if (k == 2.0) return U * (1.0 - U + std::log(U)) / (U - 1.0);
    const double q = 4.0 / (k * k);
    const double f = specfn::hyp2f1_via_beta(1.0 + q, q, 2.0 + q, 1.0 - U);
    return k * k / (k * k + 4.0) * std::pow(U, q) * (1.0 - U) * f;
}

MatchingExpansion matching_points(double delta_c, double eps, double r0, double k,
                                  model::CutoffVariant variant) {
    if (!(k > 2.0)) throw std::domain_error("matching_points: requires k > 2");
    MatchingExpansion m;
    m.r0 = r0;
    m.nu = nu(r0, k);
    // dV/dc > 0 and the speed increment is c - c(0) = -delta_c, so the
    // entry point sits below the invariant line {W = 0}.
    m.W_in = -m.nu * delta_c;
    if (variant == model::CutoffVariant::CutReactionOnly) {
        m.W_out = -2.0 / k;
    } else {
        m.W_out = -2.0 / k + delta_c - 0.5 * k * eps;
    }
    return m;
}

double kappa_exponent(double k) {
    if (!(k > 2.0)) throw std::domain_error("kappa_exponent: requires k > 2");
    const double k2 = k * k;
    return (k2 * k2 + 16.0 * k2 - 48.0) / (2.0 * k2 * (k2 + 4.0));
}

namespace {

// Antiderivative of (k^2 - 2kW) / (-2kW^2 + (k^2 + 2k dc - 4) W - k^2 dc),
// evaluated with magnitudes inside the logarithms.
double transition_time_primitive(double W, double dc, double k) {
    const double beta = k * k + 2.0 * k * dc - 4.0;
    const double disc = beta * beta - 8.0 * k * k * k * dc;
    if (disc <= 0.0)
        throw std::domain_error("normal_form_relation: negative discriminant (dc too large)");
    const double S = std::sqrt(disc);
    const double Q = -2.0 * k * W * W + beta * W - k * k * dc;
    const double num = -4.0 * k * W + beta - S;
    const double den = -4.0 * k * W + beta + S;
    const double coef = 0.5 * k * k + 2.0 - k * dc;
    return 0.5 * std::log(std::abs(Q)) + coef / S * std::log(std::abs(num / den));
}

}  // namespace

double normal_form_relation(double delta_c, double eps, double r0, double k) {
    const MatchingExpansion m = matching_points(delta_c, eps, r0, k);
    const double xi_span = std::log(r0 / eps);  // xi_out - xi_in
    return xi_span - (transition_time_primitive(m.W_out, delta_c, k) -
                      transition_time_primitive(m.W_in, delta_c, k));
}

double delta_c_normal_form_root(double eps, double r0, double k) {
    if (!(k > 2.0)) throw std::domain_error("delta_c_normal_form_root: requires k > 2");
    if (!(eps > 0.0 && eps < r0 && r0 < 1.0))
        throw std::domain_error("delta_c_normal_form_root: requires 0 < eps < r0 < 1");
    auto f = [&](double dc) { return normal_form_relation(dc, eps, r0, k); };
    const double lo = 1e-16;
    const double hi = 10.0 * delta_c_pushed(eps, k);
    const auto r = rootfind::bisect(f, lo, hi, 1e-18, 1e-13, 400);
    return r.x;
}

}  // namespace bfkpp::asymptotics
