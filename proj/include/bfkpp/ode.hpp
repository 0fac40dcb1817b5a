#ifndef BFKPP_ODE_HPP
#define BFKPP_ODE_HPP

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

// Adaptive Dormand-Prince 5(4) integration for small dense systems, with
// scalar event location by bisection over the bracketing step.

namespace bfkpp::ode {

struct StepControl {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 1e-6;
    double h_max = 1.0;
    long max_steps = 1000000;
};

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

// One Dormand-Prince step of size h from (t, y); writes the 5th-order result
// into y5 and the embedded error estimate into err.
template <int N, class F>
void dopri5_step(F&& f, double t, const Vec<N>& y, double h, Vec<N>& y5, Vec<N>& err) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference of the 5th- and embedded 4th-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const Vec<N> k1 = f(t, y);
    const Vec<N> k2 = f(t + c2 * h, y + h * (a21 * k1));
    const Vec<N> k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Vec<N> k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec<N> k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec<N> k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec<N> k7 = f(t + h, y5);
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
}

template <int N>
struct EventResult {
    double t = 0.0;
    Vec<N> y;
    long steps = 0;
    bool event_hit = false;
};

// Integrate y' = f(t,y) until event(t, y) crosses zero from positive to
// non-positive; the crossing is refined by bisection on the step fraction to
// |event| <= event_tol. Accepted states (and the refined crossing) are
// appended to *trace when given.
template <int N, class F, class G>
EventResult<N> integrate_to_event(F&& f, G&& event, double t0, Vec<N> y0,
                                  const StepControl& ctrl, double event_tol,
                                  std::vector<std::pair<double, Vec<N>>>* trace = nullptr) {
    double t = t0;
    Vec<N> y = y0;
    double h = ctrl.h_init;
    EventResult<N> res;
    if (trace) trace->push_back({t, y});

    if (event(t, y) <= 0.0)
        throw IntegrationError("integrate_to_event: event function non-positive at start");

    for (long n = 0; n < ctrl.max_steps; ++n) {
        Vec<N> y5, err;
        dopri5_step<N>(f, t, y, h, y5, err);

        double err_norm = 0.0;
        for (int i = 0; i < N; ++i) {
            const double sc = ctrl.abs_tol + ctrl.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            const double e = err[i] / sc;
            err_norm += e * e;
        }
        err_norm = std::sqrt(err_norm / N);

        if (err_norm <= 1.0) {
            const double g_new = event(t + h, y5);
            if (g_new <= 0.0) {
                // bracketed: bisect the step fraction
                double lo = 0.0, hi = 1.0;
                double tc = t + h;
                Vec<N> yc = y5;
                double gc = g_new;
                for (int it = 0; it < 200; ++it) {
                    if (std::abs(gc) <= event_tol) break;
                    const double mid = 0.5 * (lo + hi);
                    Vec<N> ym, em;
                    dopri5_step<N>(f, t, y, mid * h, ym, em);
                    const double gm = event(t + mid * h, ym);
                    if (gm <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                    tc = t + mid * h;
                    yc = ym;
                    gc = gm;
                    if (hi - lo < 1e-16) break;
                }
                res.t = tc;
                res.y = yc;
                res.steps = n + 1;
                res.event_hit = true;
                if (trace) trace->push_back({tc, yc});
                return res;
            }
            t += h;
            y = y5;
            if (trace) trace->push_back({t, y});
        }

        double fac = 0.9 * std::pow(std::max(err_norm, 1e-10), -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        h = std::min(h * fac, ctrl.h_max);
    }
    res.t = t;
    res.y = y;
    res.steps = ctrl.max_steps;
    res.event_hit = false;
    return res;
}

}  // namespace bfkpp::ode

#endif
