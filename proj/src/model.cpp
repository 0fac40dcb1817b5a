#include "bfkpp/model.hpp"

#include <cmath>
#include <stdexcept>

namespace bfkpp::model {

std::string to_string(CutoffVariant v) {
    switch (v) {
        case CutoffVariant::CutBoth: return "cut-both";
        case CutoffVariant::CutReactionOnly: return "cut-reaction-only";
        case CutoffVariant::NoCutoff: return "no-cutoff";
        case CutoffVariant::BurgersCutAdvection: return "burgers-cut-advection";
    }
    return "?";
}

CutoffVariant variant_from_string(const std::string& name) {
    if (name == "cut-both") return CutoffVariant::CutBoth;
    if (name == "cut-reaction-only") return CutoffVariant::CutReactionOnly;
    if (name == "no-cutoff") return CutoffVariant::NoCutoff;
    if (name == "burgers-cut-advection") return CutoffVariant::BurgersCutAdvection;
    throw std::invalid_argument("unknown cut-off variant: " + name);
}

PhaseState vector_field(const PhaseState& s, const ModelParams& p, double c) {
    const double U = s.U, V = s.V;
    const double H = (U > p.eps) ? 1.0 : 0.0;  // H(0) = 0
    double Vdot = -c * V;
    switch (p.variant) {
        case CutoffVariant::CutBoth:
            Vdot += (p.k * U * V - U * (1.0 - U)) * H;
            break;
        case CutoffVariant::CutReactionOnly:
            Vdot += p.k * U * V - U * (1.0 - U) * H;
            break;
        case CutoffVariant::NoCutoff:
            Vdot += p.k * U * V - U * (1.0 - U);
            break;
        case CutoffVariant::BurgersCutAdvection:
            Vdot += p.k * U * V * H;
            break;
    }
    return {V, Vdot};
}

double c_crit(double k) {
    if (k < 0.0) throw std::domain_error("c_crit: requires k >= 0");
    return (k <= 2.0) ? 2.0 : 0.5 * k + 2.0 / k;
}

double explicit_pushed_orbit(double U, double k) {
    return -0.5 * k * U * (1.0 - U);
}

double inner_manifold_V(double U, const ModelParams& p, double c) {
    if (p.variant == CutoffVariant::NoCutoff)
        throw std::domain_error("inner_manifold_V: NoCutoff has no inner region");
    if (!(U >= 0.0 && U <= p.eps))
        throw std::domain_error("inner_manifold_V: requires 0 <= U <= eps");
    switch (p.variant) {
        case CutoffVariant::CutReactionOnly:
            return -c * U + 0.5 * p.k * U * U;
        default:
            return -c * U;
    }
}

double burgers_speed(double eps, double k) {
    if (!(eps >= 0.0 && eps < 1.0)) throw std::domain_error("burgers_speed: requires 0 <= eps < 1");
    return 0.5 * k - 0.5 * k * (eps * eps);
}

Eigen::Matrix2d jacobian(const PhaseState& s, double k, double c) {
    Eigen::Matrix2d J;
    J << 0.0, 1.0,
         k * s.V - 1.0 + 2.0 * s.U, -c + k * s.U;
    return J;
}

EquilibriumEigen equilibria_eigen(const PhaseState& point, double k, double c) {
    const bool is_qminus = std::abs(point.U - 1.0) < 1e-12 && std::abs(point.V) < 1e-12;
    const bool is_qplus = std::abs(point.U) < 1e-12 && std::abs(point.V) < 1e-12;
    if (!is_qminus && !is_qplus)
        throw std::domain_error("equilibria_eigen: point is not Q- = (1,0) or Q+ = (0,0)");

    // J = [[0,1],[j21,j22]]: lambda^2 - j22 lambda - j21 = 0, eigenvector (1, lambda).
    const Eigen::Matrix2d J = jacobian(point, k, c);
    const double j21 = J(1, 0), j22 = J(1, 1);
    const double disc = j22 * j22 + 4.0 * j21;
    if (disc < 0.0)
        throw std::domain_error("equilibria_eigen: complex spectrum (spiral); not supported");

    const double s = std::sqrt(disc);
    const double lam1 = 0.5 * (j22 - s);
    const double lam2 = 0.5 * (j22 + s);

    EquilibriumEigen out;
    out.point = point;
    out.degenerate = (s == 0.0);
    out.pairs[0] = {lam1, Eigen::Vector2d(1.0, lam1).normalized()};
    out.pairs[1] = {lam2, Eigen::Vector2d(1.0, lam2).normalized()};
    return out;
}

TrappingReport trapping_region_check(const PhaseState& s, double k) {
    const double U = s.U;
    const double lower = U * (U - 1.0);
    TrappingReport r;
    r.inside = (s.V <= 0.0) && (s.V >= lower);
    r.flux_top = -U * (1.0 - U);
    r.flux_bottom = U * U * (U - 1.0) * (k - 2.0);
    return r;
}

}  // namespace bfkpp::model
