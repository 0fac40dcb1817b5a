#include "bfkpp/verify.hpp"

#include "bfkpp/asymptotics.hpp"
#include "bfkpp/charts.hpp"
#include "bfkpp/model.hpp"
#include "bfkpp/shooting.hpp"
#include "bfkpp/specfn.hpp"
#include "bfkpp/sweep.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace bfkpp::verify {

namespace {

using model::CutoffVariant;
using model::ModelParams;

struct Runner {
    std::vector<CheckResult> results;

    // body returns the observed worst-case value; pass iff observed <= bound
    void check(const std::string& module, const std::string& name, double bound,
               const std::function<double(std::string&)>& body) {
        CheckResult r;
        r.module = module;
        r.name = name;
        r.bound = bound;
        try {
            r.observed = body(r.detail);
            r.passed = r.observed <= bound;
        } catch (const std::exception& e) {
            r.passed = false;
            r.observed = std::nan("");
            r.detail = e.what();
        }
        results.push_back(r);
    }
};

double max_abs(std::initializer_list<double> xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

void specfn_checks(Runner& run) {
    run.check("specfn", "lambert_w0 defining equation on [-1/e, 10]", 1e-12,
              [](std::string&) {
                  double worst = 0.0;
                  const double lo = -0.36787944117144233;
                  for (int i = 0; i <= 400; ++i) {
                      const double x = lo + (10.0 - lo) * i / 400.0;
                      const double w = specfn::lambert_w0(x);
                      worst = std::max(worst, std::abs(w * std::exp(w) - x) /
                                                  std::max(1.0, std::abs(x)));
                  }
                  return worst;
              });

    run.check("specfn", "Gamma reflection identity on (0,1)", 1e-11, [](std::string&) {
        double worst = 0.0;
        for (int i = 1; i < 100; ++i) {
            const double x = i / 100.0;
            const double lhs = specfn::gamma_fn(1.0 + x) * specfn::gamma_fn(1.0 - x) *
                               std::sin(M_PI * x) / (M_PI * x);
            worst = std::max(worst, std::abs(lhs - 1.0));
        }
        return worst;
    });

    run.check("specfn", "inc_beta monotone in x", 0.0, [](std::string&) {
        double worst = 0.0;
        const double a = 1.25, b = 0.75;
        double prev = 0.0;
        for (int i = 1; i <= 50; ++i) {
            const double x = i / 50.0;
            const double v = specfn::inc_beta(x, a, b);
            worst = std::max(worst, prev - v);  // positive on violation
            prev = v;
        }
        return worst;
    });

    run.check("specfn", "hyp2f1 vs direct series for x <= 0.9", 1e-10, [](std::string&) {
        auto series = [](double a, double b, double c, double x) {
            double term = 1.0, sum = 1.0;
            for (int n = 0; n < 400; ++n) {
                term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum)) break;
            }
            return sum;
        };
        double worst = 0.0;
        for (double k : {2.5, 3.0, 4.0, 6.0}) {
            const double q = 4.0 / (k * k);
            for (int i = 0; i <= 9; ++i) {
                const double x = 0.1 * i;
                const double impl = specfn::hyp2f1_via_beta(1.0 + q, q, 2.0 + q, x);
                worst = std::max(worst, std::abs(impl - series(1.0 + q, q, 2.0 + q, x)));
            }
        }
        return worst;
    });
}

void model_checks(Runner& run) {
    run.check("model", "explicit pushed orbit solves the field identically", 1e-12,
              [](std::string&) {
                  double worst = 0.0;
                  for (double k : {2.0, 3.0, 4.0, 6.0}) {
                      const double c = model::c_crit(k);
                      for (int i = 1; i < 100; ++i) {
                          const double U = i / 100.0;
                          const double V = model::explicit_pushed_orbit(U, k);
                          const double dVdU = -0.5 * k * (1.0 - 2.0 * U);
                          const double res = dVdU * V - (-c * V + k * U * V - U * (1.0 - U));
                          worst = std::max(worst, std::abs(res));
                      }
                  }
                  return worst;
              });

    run.check("model", "c_crit continuity and lower bound", 1e-12, [](std::string&) {
        const double jump = std::abs(model::c_crit(2.0 + 1e-13) - model::c_crit(2.0));
        double min_excess = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double k = 0.1 * i;
            min_excess = std::min(min_excess, model::c_crit(k) - 2.0);
        }
        return std::max(jump, -min_excess);
    });

    run.check("model", "field jump across {U = eps} equals k*eps*V - eps*(1-eps)", 1e-14,
              [](std::string&) {
                  // one-sided limits at U = eps: H = 1 from above, H = 0 from below
                  const ModelParams cut{4.0, 0.01, CutoffVariant::CutBoth};
                  const ModelParams smooth{4.0, 0.01, CutoffVariant::NoCutoff};
                  const double c = 4.5, V = -0.5;
                  const auto above = model::vector_field({cut.eps, V}, smooth, c);
                  const auto below = model::vector_field({cut.eps, V}, cut, c);
                  const double expected = cut.k * cut.eps * V - cut.eps * (1.0 - cut.eps);
                  return std::abs((above.V - below.V) - expected);
              });

    run.check("model", "inner manifold satisfies the inner ODE", 1e-12, [](std::string&) {
        // the manifolds are linear/quadratic in U, so the central difference
        // is exact up to rounding for any h inside [0, eps]
        double worst = 0.0;
        const double c = 4.3, k = 4.0, eps = 0.01, h = 0.125 * eps;
        for (int i = 2; i <= 6; ++i) {
            const double U = eps * i / 8.0;
            ModelParams pb{k, eps, CutoffVariant::CutBoth};
            ModelParams pr{k, eps, CutoffVariant::CutReactionOnly};
            const double d_b = (model::inner_manifold_V(U + h, pb, c) -
                                model::inner_manifold_V(U - h, pb, c)) / (2.0 * h);
            const double d_r = (model::inner_manifold_V(U + h, pr, c) -
                                model::inner_manifold_V(U - h, pr, c)) / (2.0 * h);
            worst = std::max(worst, max_abs({d_b - (-c), d_r - (-c + k * U)}));
        }
        return worst;
    });
}

void charts_checks(Runner& run) {
    run.check("charts", "kappa21 then blow_down equals blow_down", 1e-15, [](std::string&) {
        double worst = 0.0;
        unsigned long long s = 12345;
        auto rnd = [&s]() {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return (s >> 11) * (1.0 / 9007199254740992.0);
        };
        for (int i = 0; i < 200; ++i) {
            const auto p = charts::ChartPoint::k2(0.05 + rnd(), -3.0 * rnd(), 0.05 * rnd());
            const Eigen::Vector3d a = charts::blow_down(p);
            const Eigen::Vector3d b = charts::blow_down(charts::kappa21(p));
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
        }
        return worst;
    });

    run.check("charts", "gamma1+ pulled satisfies dv1/deps1 = (v1+1)^2/(eps1 v1)", 1e-6,
              [](std::string&) {
                  double worst = 0.0;
                  for (int i = 1; i <= 50; ++i) {
                      const double e1 = 0.02 + 0.96 * i / 51.0;
                      const double h = 1e-6;
                      const double d = (charts::gamma1_plus_pulled(e1 + h) -
                                        charts::gamma1_plus_pulled(e1 - h)) / (2.0 * h);
                      const double v = charts::gamma1_plus_pulled(e1);
                      worst = std::max(worst, std::abs(d - (v + 1.0) * (v + 1.0) / (e1 * v)));
                  }
                  return worst;
              });

    run.check("charts", "gamma1+ pushed back-substitution residual", 1e-10, [](std::string&) {
        double worst = 0.0;
        for (double k : {2.5, 4.0, 6.0}) {
            for (int i = 1; i <= 40; ++i) {
                const double e1 = i / 40.0;
                const double v1 = charts::gamma1_plus_pushed(e1, k);
                worst = std::max(worst, std::abs(charts::gamma1_plus_pushed_residual(v1, e1, k)));
            }
        }
        return worst;
    });

    run.check("charts", "gamma1+ strictly decreasing in eps1", 0.0, [](std::string&) {
        double worst = -1.0;  // requires strict decrease; any rise is a violation
        double prev_pull = charts::gamma1_plus_pulled(1e-3);
        double prev_push = charts::gamma1_plus_pushed(1e-3, 4.0);
        for (int i = 1; i <= 60; ++i) {
            const double e1 = 1e-3 + (1.0 - 1e-3) * i / 60.0;
            const double vp = charts::gamma1_plus_pulled(e1);
            const double vq = charts::gamma1_plus_pushed(e1, 4.0);
            worst = std::max(worst, vp - prev_pull);
            worst = std::max(worst, vq - prev_push);
            prev_pull = vp;
            prev_push = vq;
        }
        return worst;
    });

    run.check("charts", "gamma1- is an invariant graph of the K1 field", 1e-12,
              [](std::string&) {
                  double worst = 0.0;
                  for (double k : {2.0, 3.0, 4.0, 6.0}) {
                      const double c = model::c_crit(k);
                      for (int i = 1; i <= 50; ++i) {
                          const double r1 = i / 50.0;
                          const double v1 = charts::gamma1_minus_pushed(r1, k);
                          const Eigen::Vector3d f = charts::k1_field({r1, v1, 0.0}, k, c);
                          worst = std::max(worst, std::abs(f[1] - 0.5 * k * f[0]));
                      }
                  }
                  return worst;
              });

    run.check("charts", "K1 equilibrium lemmas vs numerical eigenvalues", 1e-10,
              [](std::string&) {
                  double worst = 0.0;
                  for (double k : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0}) {
                      for (const auto& eq : charts::k1_equilibria_eigen(k)) {
                          const Eigen::Matrix3d J =
                              charts::k1_jacobian(eq.point, k, model::c_crit(k));
                          Eigen::EigenSolver<Eigen::Matrix3d> es(J);
                          Eigen::Vector3d lam = es.eigenvalues().real();
                          std::sort(lam.data(), lam.data() + 3);
                          Eigen::Vector3d expect = eq.eigenvalues;
                          std::sort(expect.data(), expect.data() + 3);
                          worst = std::max(worst, (lam - expect).cwiseAbs().maxCoeff());
                      }
                  }
                  return worst;
              });
}

void asymptotics_checks(Runner& run) {
    run.check("asymptotics", "alpha_limit closed-form identity", 1e-12, [](std::string&) {
        double worst = 0.0;
        for (double k = 2.1; k < 8.0; k += 0.1) {
            const double q = 4.0 / (k * k);
            const double gg = specfn::gamma_fn(1.0 + q) * specfn::gamma_fn(1.0 - q);
            const double lhs = asymptotics::alpha_limit(k) * gg * std::pow(k, 1.0 + 2.0 * q) /
                               (2.0 * std::pow(k * k - 4.0, q));
            worst = std::max(worst, std::abs(lhs - 1.0));
        }
        return worst;
    });

    run.check("asymptotics", "dV/dc solves the variational ODE", 1e-6, [](std::string&) {
        double worst = 0.0;
        for (double k : {2.0, 3.0, 4.0}) {
            for (int i = 0; i <= 90; ++i) {
                const double U = 0.05 + 0.9 * i / 90.0;
                const double h = 1e-6;
                const double d = (asymptotics::dVdc_at_ccrit(U + h, k) -
                                  asymptotics::dVdc_at_ccrit(U - h, k)) / (2.0 * h);
                const double rhs = -1.0 + 4.0 / (k * k) / (U * (1.0 - U)) *
                                              asymptotics::dVdc_at_ccrit(U, k);
                worst = std::max(worst, std::abs(d - rhs));
            }
        }
        return worst;
    });

    run.check("asymptotics", "dV/dc positive on (0,1)", 0.0, [](std::string&) {
        double worst = -1.0;
        for (double k : {2.0, 3.0, 4.0, 6.0})
            for (int i = 1; i < 40; ++i)
                worst = std::max(worst, -asymptotics::dVdc_at_ccrit(i / 40.0, k));
        return worst;
    });

    run.check("asymptotics", "delta(r0) converges monotonically to its limit", 0.0,
              [](std::string& detail) {
                  const double k = 4.0;
                  const double lim = asymptotics::delta_r0_limit(k);
                  double prev = std::abs(asymptotics::delta_r0(1e-2, k) - lim);
                  double worst = -prev;
                  for (double r0 = 1e-3; r0 >= 0.9e-6; r0 *= 0.1) {
                      const double d = std::abs(asymptotics::delta_r0(r0, k) - lim);
                      worst = std::max(worst, d - prev);
                      prev = d;
                  }
                  std::ostringstream os;
                  os << "limit " << lim << ", |delta(1e-6) - limit| " << prev;
                  detail = os.str();
                  return worst;
              });

    run.check("asymptotics", "pushed coefficient vanishes as k -> 2+", 1e-3, [](std::string&) {
        return asymptotics::delta_c_pushed(1e-3, 2.0 + 1e-6);
    });
}

void shooting_checks(Runner& run) {
    run.check("shooting", "orbit tracks the explicit pushed heteroclinic (k=4)", 1e-6,
              [](std::string&) {
                  const ModelParams p{4.0, 1e-3, CutoffVariant::CutBoth};
                  auto [end, trace] = shooting::integrate_to_cutoff(p, model::c_crit(4.0));
                  (void)end;
                  double worst = 0.0;
                  for (const auto& row : trace.rows) {
                      if (row.U > 1.0 - 1e-6 || row.U < 1e-3) continue;
                      worst = std::max(worst,
                                       std::abs(row.V - model::explicit_pushed_orbit(row.U, 4.0)));
                  }
                  return worst;
              });

    run.check("shooting", "matching residual changes sign exactly once", 0.0,
              [](std::string&) {
                  const ModelParams p{4.0, 1e-2, CutoffVariant::CutBoth};
                  int sign_changes = 0;
                  double prev = shooting::matching_residual(model::c_crit(4.0) - 0.5, p);
                  for (int i = 1; i <= 50; ++i) {
                      const double c = model::c_crit(4.0) - 0.5 + 0.5 * i / 50.0;
                      const double r = shooting::matching_residual(c, p);
                      if ((r > 0.0) != (prev > 0.0)) ++sign_changes;
                      prev = r;
                  }
                  return std::abs(sign_changes - 1.0);
              });

    run.check("shooting", "pulled orbit stays inside the trapping region (k=1.5)", 0.0,
              [](std::string&) {
                  const ModelParams p{1.5, 1e-4, CutoffVariant::CutBoth};
                  auto [end, trace] = shooting::integrate_to_cutoff(p, 2.0);
                  (void)end;
                  double worst = -1.0;
                  for (const auto& row : trace.rows) {
                      worst = std::max(worst, row.V);                              // V <= 0
                      worst = std::max(worst, row.U * (row.U - 1.0) - row.V);      // V >= U(U-1)
                  }
                  return worst;
              });

    run.check("shooting", "speed deficit grows with eps", 0.0, [](std::string&) {
        const ModelParams p1{4.0, 1e-3, CutoffVariant::CutBoth};
        const ModelParams p2{4.0, 1e-4, CutoffVariant::CutBoth};
        const double c1 = shooting::solve_speed(p1).c;
        const double c2 = shooting::solve_speed(p2).c;
        const double c0 = model::c_crit(4.0);
        return std::max(c1 - c2, c2 - c0);  // require c1 < c2 < c0
    });
}

void sweep_checks(Runner& run) {
    sweep::SweepSpec spec;
    spec.k = 4.0;
    spec.eps_min = 1e-4;
    spec.eps_max = 1e-2;
    spec.points = 12;
    spec.variants = {CutoffVariant::CutBoth, CutoffVariant::CutReactionOnly};
    const auto res = sweep::run_sweep(spec);

    run.check("sweep", "pushed leading exponent (k=4): slope within 0.75 +/- 0.03", 0.03,
              [&](std::string& detail) {
                  const auto fit = sweep::fit_error_slope(res, sweep::ErrColumn::CCritMinusC);
                  detail = "slope " + std::to_string(fit.slope);
                  return std::abs(fit.slope - 0.75);
              });

    run.check("sweep", "next-order error (k=4): slope within 1.5 +/- 0.15", 0.15,
              [&](std::string& detail) {
                  const auto fit = sweep::fit_error_slope(res, sweep::ErrColumn::AbsErr);
                  detail = "slope " + std::to_string(fit.slope);
                  return std::abs(fit.slope - 1.5);
              });

    run.check("sweep", "variant gap (k=4): slope within 1.8 +/- 0.2", 0.2,
              [&](std::string& detail) {
                  const auto fit = sweep::fit_error_slope(res, sweep::ErrColumn::CMinusGamma);
                  detail = "slope " + std::to_string(fit.slope);
                  return std::abs(fit.slope - 1.8);
              });

    // measured on [1e-6, 1e-4]: at k = 2*sqrt(2) the next-order correction
    // decays like eps^(1/2) and still skews the fit on coarser grids
    run.check("sweep", "pushed leading exponent (k=2*sqrt(2)): slope within 0.5 +/- 0.03", 0.03,
              [](std::string& detail) {
                  sweep::SweepSpec s2;
                  s2.k = 2.0 * std::sqrt(2.0);
                  s2.eps_min = 1e-6;
                  s2.eps_max = 1e-4;
                  s2.points = 12;
                  const auto r2 = sweep::run_sweep(s2);
                  const auto fit = sweep::fit_error_slope(r2, sweep::ErrColumn::CCritMinusC);
                  detail = "slope " + std::to_string(fit.slope);
                  return std::abs(fit.slope - 0.5);
              });
}

}  // namespace

std::vector<CheckResult> run_checks(Level level) {
    Runner run;
    specfn_checks(run);
    model_checks(run);
    charts_checks(run);
    asymptotics_checks(run);
    shooting_checks(run);
    if (level == Level::Full) sweep_checks(run);
    return run.results;
}

}  // namespace bfkpp::verify
