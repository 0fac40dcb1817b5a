#ifndef BFKPP_MODEL_HPP
#define BFKPP_MODEL_HPP

#include <Eigen/Core>

#include <array>
#include <string>

// The travelling-wave phase plane of the Burgers-FKPP equation with a
// Heaviside cut-off: the first-order systems for each cut-off variant,
// their equilibria and linearizations, the exact inner-region stable
// manifolds, and critical-speed / trapping-region primitives.
//
// Conventions: the front profile is U(xi) with xi = x - c t, V = U', and the
// Heaviside factor H(U - eps) is 0 for U <= eps and 1 for U > eps.

namespace bfkpp::model {

enum class CutoffVariant {
    CutBoth,              // cut-off multiplies reaction and advection
    CutReactionOnly,      // cut-off multiplies the reaction term only
    NoCutoff,             // the plain Burgers-FKPP system
    BurgersCutAdvection,  // no reaction; cut-off multiplies the advection term
};

std::string to_string(CutoffVariant v);
CutoffVariant variant_from_string(const std::string& name);

struct ModelParams {
    double k = 0.0;    // advection strength, k >= 0
    double eps = 0.0;  // cut-off threshold, 0 <= eps < 1
    CutoffVariant variant = CutoffVariant::CutBoth;
};

struct PhaseState {
    double U = 0.0;  // profile value
    double V = 0.0;  // profile derivative U'

    Eigen::Vector2d vec() const { return {U, V}; }
    static PhaseState from(const Eigen::Vector2d& y) { return {y[0], y[1]}; }
};

// Right-hand side (U', V') of the travelling-wave system at speed c.
PhaseState vector_field(const PhaseState& s, const ModelParams& p, double c);

// Critical speed without cut-off: 2 for k <= 2, k/2 + 2/k for k > 2.
double c_crit(double k);

// The explicit heteroclinic V(U) = -(k/2) U (1-U), exact for k >= 2 at
// c = c_crit(k).
double explicit_pushed_orbit(double U, double k);

// Exact stable-manifold value V(U) in the inner region U <= eps:
// -c U for CutBoth / BurgersCutAdvection, -c U + (k/2) U^2 for
// CutReactionOnly. NoCutoff has no inner region and is rejected.
double inner_manifold_V(double U, const ModelParams& p, double c);

// Closed-form front speed of the advection-only variant: (k/2)(1 - eps^2).
double burgers_speed(double eps, double k);

// Eigen-decomposition of the linearization of the NoCutoff field at one of
// the two rest states Q- = (1,0), Q+ = (0,0). Only real spectra arise at the
// speeds of interest; a complex pair (Q+ with c < 2) is rejected.
struct EigenPair {
    double lambda;
    Eigen::Vector2d v;
};
struct EquilibriumEigen {
    PhaseState point;
    std::array<EigenPair, 2> pairs;  // ordered by ascending eigenvalue
    bool degenerate = false;         // double eigenvalue (single eigenvector)
};
EquilibriumEigen equilibria_eigen(const PhaseState& point, double k, double c);

// Jacobian of the NoCutoff field at an arbitrary state.
Eigen::Matrix2d jacobian(const PhaseState& s, double k, double c);

// Membership and boundary-flux report for the trapping region
// { U(U-1) <= V <= 0 }. flux_top is the inward normal flux on {V = 0};
// flux_bottom is U^2 (U-1)(k-2) on {V = U(U-1)}, positive (inward) for
// k < 2 and identically zero for k = 2.
struct TrappingReport {
    bool inside;
    double flux_top;
    double flux_bottom;
};
TrappingReport trapping_region_check(const PhaseState& s, double k);

}  // namespace bfkpp::model

#endif
