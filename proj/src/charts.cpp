#include "bfkpp/charts.hpp"

#include "bfkpp/model.hpp"
#include "bfkpp/ode.hpp"
#include "bfkpp/rootfind.hpp"
#include "bfkpp/specfn.hpp"

#include <cmath>
#include <stdexcept>

namespace bfkpp::charts {

bool Section::contains(const ChartPoint& p, double tol) const {
    switch (id) {
        case SectionId::Sigma2In:
            return p.chart == Chart::K2 && std::abs(p.u2() - 1.0) <= tol;
        case SectionId::Sigma1Out:
            return p.chart == Chart::K1 && std::abs(p.eps1() - 1.0) <= tol;
        case SectionId::Sigma1In:
            return p.chart == Chart::K1 && std::abs(p.r1() - r0) <= tol;
    }
    return false;
}

Eigen::Vector3d blow_down(const ChartPoint& p) {
    if (p.chart == Chart::K1) return {p.r1(), p.r1() * p.v1(), p.r1() * p.eps1()};
    return {p.r2() * p.u2(), p.r2() * p.v2(), p.r2()};
}

ChartPoint kappa21(const ChartPoint& p) {
    if (p.chart != Chart::K2) throw std::domain_error("kappa21: expects a K2 point");
    if (!(p.u2() > 0.0)) throw std::domain_error("kappa21: requires u2 > 0");
    return ChartPoint::k1(p.r2() * p.u2(), p.v2() / p.u2(), 1.0 / p.u2());
}

double gamma2(double u2, double k) { return -model::c_crit(k) * u2; }

double gamma1_plus_pulled(double eps1) {
    if (!(eps1 > 0.0)) throw std::domain_error("gamma1_plus_pulled: requires eps1 > 0");
    const double w = specfn::lambert_w0(std::exp(1.0) / eps1);
    return -(1.0 + w) / w;
}

namespace {

// k^2 ln|k + 2 v1| - 4 ln|k v1 + 2|; strictly decreasing on [-k/2 - 2/k, -k/2).
double pushed_logform(double v1, double k) {
    return k * k * std::log(std::abs(k + 2.0 * v1)) - 4.0 * std::log(std::abs(k * v1 + 2.0));
}

}  // namespace

double gamma1_plus_pushed_residual(double v1, double eps1, double k) {
    const double v_bc = -0.5 * k - 2.0 / k;
    return pushed_logform(v1, k) - (k * k - 4.0) * std::log(eps1) - pushed_logform(v_bc, k);
}

double gamma1_plus_pushed(double eps1, double k) {
    if (!(k > 2.0)) throw std::domain_error("gamma1_plus_pushed: requires k > 2");
    if (!(eps1 > 0.0 && eps1 <= 1.0))
        throw std::domain_error("gamma1_plus_pushed: requires eps1 in (0, 1]");

    const double v_bc = -0.5 * k - 2.0 / k;  // v1(1)
    if (eps1 == 1.0) return v_bc;

    // The log-form is strictly monotone between the boundary value and the
    // asymptote at v1 = -k/2, so bisection cannot fail for valid inputs.
    const double lo = v_bc;
    const double hi = -0.5 * k - 1e-14;
    auto f = [&](double v) { return gamma1_plus_pushed_residual(v, eps1, k); };
    rootfind::RootResult r;
    try {
        r = rootfind::bisect(f, lo, hi, 1e-15, 0.0, 300);
    } catch (const rootfind::BracketError& e) {
        throw std::runtime_error(std::string("gamma1_plus_pushed: internal bracket failure: ") +
                                 e.what());
    }
    return r.x;
}

double gamma1_minus_pushed(double r1, double k) {
    return -0.5 * k * (1.0 - r1);
}

Eigen::Vector3d k1_field(const Eigen::Vector3d& p, double k, double c) {
    const double r1 = p[0], v1 = p[1], eps1 = p[2];
    return {r1 * v1,
            -c * v1 + k * r1 * v1 - (1.0 - r1) - v1 * v1,
            -eps1 * v1};
}

Eigen::Matrix3d k1_jacobian(const Eigen::Vector3d& p, double k, double c) {
    const double r1 = p[0], v1 = p[1], eps1 = p[2];
    Eigen::Matrix3d J;
    J << v1, r1, 0.0,
         k * v1 + 1.0, -c + k * r1 - 2.0 * v1, 0.0,
         0.0, -eps1, -v1;
    return J;
}

std::vector<K1Equilibrium> k1_equilibria_eigen(double k) {
    std::vector<K1Equilibrium> out;
    auto unit = [](int i) { return Eigen::Vector3d::Unit(i); };
    if (k <= 2.0) {
        K1Equilibrium p1;
        p1.label = "P1";
        p1.point = {0.0, -1.0, 0.0};
        p1.eigenvalues = {-1.0, 0.0, 1.0};
        p1.eigenvectors.col(0) = Eigen::Vector3d(1.0, k - 1.0, 0.0).normalized();
        p1.eigenvectors.col(1) = unit(1);
        p1.eigenvectors.col(2) = unit(2);
        out.push_back(p1);
    } else {
        K1Equilibrium hat;
        hat.label = "P1hat";
        hat.point = {0.0, -0.5 * k, 0.0};
        hat.eigenvalues = {-0.5 * k, 0.5 * k - 2.0 / k, 0.5 * k};
        hat.eigenvectors.col(0) = Eigen::Vector3d(2.0 / k, 1.0, 0.0).normalized();
        hat.eigenvectors.col(1) = unit(1);
        hat.eigenvectors.col(2) = unit(2);
        out.push_back(hat);

        // weak-direction partner; listed for completeness
        K1Equilibrium chk;
        chk.label = "P1check";
        chk.point = {0.0, -2.0 / k, 0.0};
        const double lam_r = -2.0 / k;                 // d(r1')/dr1 = v1
        const double lam_v = -0.5 * k - 2.0 / k - 2.0 * (-2.0 / k);  // -c - 2 v1
        const double lam_e = 2.0 / k;                  // -v1
        chk.eigenvalues = {lam_r, lam_v, lam_e};
        chk.eigenvectors.col(0) =
            Eigen::Vector3d(1.0, (k * (-2.0 / k) + 1.0) / (lam_r - lam_v), 0.0).normalized();
        chk.eigenvectors.col(1) = unit(1);
        chk.eigenvectors.col(2) = unit(2);
        out.push_back(chk);
    }
    return out;
}

SingularOrbit singular_orbit(double k, int samples_per_piece) {
    if (!(k > 0.0)) throw std::domain_error("singular_orbit: requires k > 0");
    const int n = std::max(2, samples_per_piece);
    const double c0 = model::c_crit(k);

    SingularOrbit orb;
    orb.k = k;
    orb.p2_in = ChartPoint::k2(1.0, -c0, 0.0);
    orb.p1_out = kappa21(orb.p2_in);
    orb.corner = (k <= 2.0) ? Eigen::Vector3d(0.0, -1.0, 0.0) : Eigen::Vector3d(0.0, -0.5 * k, 0.0);

    // Gamma2: u2 from 0 (Q2+) to 1 (P2^in)
    OrbitPiece g2;
    g2.name = "gamma2";
    for (int i = 0; i < n; ++i) {
        const double u2 = static_cast<double>(i) / (n - 1);
        g2.samples.push_back(ChartPoint::k2(u2, gamma2(u2, k), 0.0));
    }
    orb.pieces.push_back(std::move(g2));

    // Gamma1+: eps1 from 1 (P1^out) down toward 0 (P1 or P1hat), log-spaced
    OrbitPiece g1p;
    g1p.name = "gamma1-plus";
    const double eps1_floor = 1e-6;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        const double eps1 = std::pow(eps1_floor, t);  // 1 -> eps1_floor
        const double v1 = (k <= 2.0) ? gamma1_plus_pulled(eps1) : gamma1_plus_pushed(eps1, k);
        g1p.samples.push_back(ChartPoint::k1(0.0, v1, eps1));
    }
    orb.pieces.push_back(std::move(g1p));

    // Gamma1-: r1 from ~0 (corner) to 1 (Q1-)
    OrbitPiece g1m;
    g1m.name = "gamma1-minus";
    if (k >= 2.0) {
        for (int i = 0; i < n; ++i) {
            const double r1 = static_cast<double>(i) / (n - 1);
            g1m.samples.push_back(ChartPoint::k1(r1, gamma1_minus_pushed(r1, k), 0.0));
        }
    } else {
        // No closed form: integrate the blown-down system at c = c_crit from
        // the unstable eigendirection of Q1- = (1,0) down to small U, then
        // report (r1, v1) = (U, V/U).
        const model::ModelParams p{k, 0.0, model::CutoffVariant::NoCutoff};
        const auto eig = model::equilibria_eigen({1.0, 0.0}, k, c0);
        Eigen::Vector2d dir = eig.pairs[1].v;  // unstable (positive eigenvalue)
        if (dir[1] > 0.0) dir = -dir;          // orient into {U < 1, V < 0}
        Eigen::Vector2d y = Eigen::Vector2d(1.0, 0.0) + 1e-10 * dir;

        auto rhs = [&](double, const Eigen::Vector2d& s) {
            const auto d = model::vector_field({s[0], s[1]}, p, c0);
            return Eigen::Vector2d(d.U, d.V);
        };
        const double u_floor = 1e-4;
        auto event = [&](double, const Eigen::Vector2d& s) { return s[0] - u_floor; };
        ode::StepControl ctrl;
        std::vector<std::pair<double, Eigen::Vector2d>> raw;
        ode::integrate_to_event<2>(rhs, event, 0.0, y, ctrl, 1e-12, &raw);

        // thin to ~n samples, ordered from small r1 (corner end) to Q1-
        const size_t stride = std::max<size_t>(1, raw.size() / n);
        for (size_t i = raw.size(); i-- > 0;) {
            if (i % stride != 0 && i != 0 && i + 1 != raw.size()) continue;
            const double U = raw[i].second[0], V = raw[i].second[1];
            if (U <= 0.0) continue;
            g1m.samples.push_back(ChartPoint::k1(U, V / U, 0.0));
        }
    }
    orb.pieces.push_back(std::move(g1m));
    return orb;
}

}  // namespace bfkpp::charts
