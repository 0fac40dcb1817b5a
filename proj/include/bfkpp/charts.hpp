#ifndef BFKPP_CHARTS_HPP
#define BFKPP_CHARTS_HPP

#include <Eigen/Core>

#include <string>
#include <vector>

// Blow-up charts for the degenerate corner (U, V, eps) = (0, 0, 0):
//   K1 (phase-directional, "outer"):  U = r1,     V = r1 v1,  eps = r1 eps1
//   K2 (rescaling, "inner"):          U = r2 u2,  V = r2 v2,  eps = r2
// together with the coordinate change kappa21 and the closed-form singular
// orbit pieces Gamma2, Gamma1+ (pulled and pushed) and Gamma1-.

namespace bfkpp::charts {

enum class Chart { K1, K2 };

struct ChartPoint {
    Chart chart = Chart::K1;
    Eigen::Vector3d c = Eigen::Vector3d::Zero();  // (r1,v1,eps1) or (u2,v2,r2)

    static ChartPoint k1(double r1, double v1, double eps1) {
        return {Chart::K1, {r1, v1, eps1}};
    }
    static ChartPoint k2(double u2, double v2, double r2) {
        return {Chart::K2, {u2, v2, r2}};
    }

    double r1() const { return c[0]; }
    double v1() const { return c[1]; }
    double eps1() const { return c[2]; }
    double u2() const { return c[0]; }
    double v2() const { return c[1]; }
    double r2() const { return c[2]; }
};

// The transition sections between the charts. Sigma2In = {u2 = 1} is the
// blown-up image of {U = eps}; Sigma1Out = {eps1 = 1}; Sigma1In = {r1 = r0}.
enum class SectionId { Sigma2In, Sigma1Out, Sigma1In };
struct Section {
    SectionId id = SectionId::Sigma2In;
    double r0 = 0.0;  // only Sigma1In
    bool contains(const ChartPoint& p, double tol = 1e-12) const;
};

// Blow-down to original coordinates (U, V, eps).
Eigen::Vector3d blow_down(const ChartPoint& p);

// Change of coordinates K2 -> K1: r1 = r2 u2, v1 = v2 / u2, eps1 = 1 / u2.
// Requires u2 > 0.
ChartPoint kappa21(const ChartPoint& p);

// Gamma2: v2(u2) = -c_crit(k) u2, the singular stable manifold in K2.
double gamma2(double u2, double k);

// Gamma1+ in the pulled regime (k <= 2): v1(eps1) = -(1 + W0(e/eps1)) / W0(e/eps1)
// on eps1 in (0, 1]; v1(1) = -2 and v1 -> -1 as eps1 -> 0+.
double gamma1_plus_pulled(double eps1);

// Gamma1+ in the pushed regime (k > 2): the unique v1 in [-k/2 - 2/k, -k/2)
// solving k^2 ln|k + 2 v1| - 4 ln|k v1 + 2| = (k^2 - 4) ln eps1 + const,
// the constant fixed by v1(1) = -k/2 - 2/k. v1 -> -k/2 as eps1 -> 0+.
double gamma1_plus_pushed(double eps1, double k);

// The log-form relation residual underlying gamma1_plus_pushed (zero along
// the orbit); exposed for back-substitution checks.
double gamma1_plus_pushed_residual(double v1, double eps1, double k);

// Gamma1- in the pushed regime (k > 2, valid at k = 2): v1(r1) = -(k/2)(1 - r1).
double gamma1_minus_pushed(double r1, double k);

// The K1 vector field (r1' = r1 v1, v1' = -c v1 + k r1 v1 - (1 - r1) - v1^2,
// eps1' = -eps1 v1) and its Jacobian, with H = 1 (outer region).
Eigen::Vector3d k1_field(const Eigen::Vector3d& p, double k, double c);
Eigen::Matrix3d k1_jacobian(const Eigen::Vector3d& p, double k, double c);

// Eigen-data of the K1 equilibria on {r1 = 0, eps1 = 0} at c = c_crit(k):
// P1 = (0,-1,0) for k <= 2; P1hat = (0,-k/2,0) and P1check = (0,-2/k,0) for
// k > 2. Closed-form eigenvalues and eigenvectors per the linearization.
struct K1Equilibrium {
    std::string label;  // "P1", "P1hat", "P1check"
    Eigen::Vector3d point;
    Eigen::Vector3d eigenvalues;
    Eigen::Matrix3d eigenvectors;  // columns match eigenvalues
};
std::vector<K1Equilibrium> k1_equilibria_eigen(double k);

// The singular heteroclinic orbit assembled from its closed-form pieces,
// ordered from Q2+ (U = 0 end) to Q1- (U = 1 end). For k < 2 the Gamma1-
// piece has no closed form and is sampled by integrating the blown-down
// system at c = c_crit inside the trapping region.
struct OrbitPiece {
    std::string name;  // "gamma2", "gamma1-plus", "gamma1-minus"
    std::vector<ChartPoint> samples;
};
struct SingularOrbit {
    double k = 0.0;
    ChartPoint p2_in;            // Gamma2 ∩ Sigma2In
    ChartPoint p1_out;           // kappa21(p2_in)
    Eigen::Vector3d corner;      // P1 (k <= 2) or P1hat (k > 2), K1 coords
    std::vector<OrbitPiece> pieces;
};
SingularOrbit singular_orbit(double k, int samples_per_piece = 200);

}  // namespace bfkpp::charts

#endif
