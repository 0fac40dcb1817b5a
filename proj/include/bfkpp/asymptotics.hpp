#ifndef BFKPP_ASYMPTOTICS_HPP
#define BFKPP_ASYMPTOTICS_HPP

#include "bfkpp/model.hpp"

// Closed-form asymptotics of the cut-off-induced speed correction
// Delta_c(eps) = c(0) - c(eps): the pulled logarithmic law, the pushed
// fractional-power law with its coefficient, the variational derivative
// dV/dc at criticality, the matched expansion endpoints W^in / W^out, and
// the transcendental normal-form relation refining Delta_c.
//
// Sign convention throughout: Delta_c > 0 and c(eps) = c(0) - Delta_c.

namespace bfkpp::asymptotics {

enum class Regime { Pulled, Pushed };

inline Regime regime_of(double k) { return k <= 2.0 ? Regime::Pulled : Regime::Pushed; }

struct SpeedCorrection {
    double delta_c = 0.0;
    Regime regime = Regime::Pulled;
    double leading_exponent = 0.0;  // 0 marks the logarithmic law
};

// Pulled regime (k <= 2): Delta_c = pi^2 / (ln eps)^2, eps in (0,1).
double delta_c_pulled(double eps);

// Coefficient of eps^(1 - 4/k^2) in the pushed law:
// 2 / k^(1+8/k^2) * (k^2-4)^(4/k^2) / (Gamma(1+4/k^2) Gamma(1-4/k^2)).
double alpha_limit(double k);

// Pushed regime (k > 2): Delta_c = alpha_limit(k) * eps^(1 - 4/k^2).
double delta_c_pushed(double eps, double k);

// Leading-order correction for the regime selected by k.
SpeedCorrection speed_correction(double eps, double k);

// Leading-order speed estimate c_hat = c_crit(k) - Delta_c(eps).
double c_hat(double eps, double k);

// nu(r0) = k^2/(k^2+4) r0^(4/k^2 - 1) (1 - r0) 2F1(1+4/k^2, 4/k^2, 2+4/k^2, 1-r0).
double nu(double r0, double k);

// delta(r0) = r0^(1-4/k^2) [ (k^2-4) nu(r0) - k^2 ];
// delta(r0) -> (k^2-4) Gamma(1+4/k^2) Gamma(1-4/k^2) as r0 -> 0+.
double delta_r0(double r0, double k);
double delta_r0_limit(double k);

// dV/dc at c = c_crit along the critical orbit, for k >= 2:
//   k = 2:  U (1 - U + ln U) / (U - 1)
//   k > 2:  k^2/(k^2+4) U^(4/k^2) (1-U) 2F1(1+4/k^2, 4/k^2, 2+4/k^2, 1-U)
double dVdc_at_ccrit(double U, double k);

// Leading-order normal-form coordinates of the transition endpoints:
// W^in = -nu(r0) * Delta_c (the speed increment is -Delta_c and dV/dc > 0);
// W^out = -2/k + Delta_c - (k/2) eps for the fully cut-off system, -2/k
// when the advection term carries no cut-off.
struct MatchingExpansion {
    double W_in = 0.0;
    double W_out = 0.0;
    double r0 = 0.0;
    double nu = 0.0;
};
MatchingExpansion matching_points(double delta_c, double eps, double r0, double k,
                                  model::CutoffVariant variant = model::CutoffVariant::CutBoth);

// Gronwall exponent kappa(k) = (k^4 + 16 k^2 - 48) / (2 k^2 (k^2 + 4));
// kappa > 1/2 on (2, inf), kappa -> 1/2 as k -> inf.
double kappa_exponent(double k);

// The transcendental relation obtained by integrating the simplified normal
// form between W^in and W^out over the transition time ln(r0/eps); returns
// the residual as a function of a trial Delta_c (zero at the solution).
double normal_form_relation(double delta_c, double eps, double r0, double k);

// Root Delta_c of normal_form_relation on (0, 10 * delta_c_pushed);
// converges to delta_c_pushed(eps, k) as eps -> 0.
double delta_c_normal_form_root(double eps, double r0, double k);

}  // namespace bfkpp::asymptotics

#endif
