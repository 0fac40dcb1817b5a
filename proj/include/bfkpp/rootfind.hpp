#ifndef BFKPP_ROOTFIND_HPP
#define BFKPP_ROOTFIND_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace bfkpp::rootfind {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

// Thrown when f(a) and f(b) have the same sign; carries both residuals.
struct BracketError : std::runtime_error {
    double fa, fb;
    BracketError(double a, double b, double fa_, double fb_)
        : std::runtime_error("no sign change on bracket [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]: f = " + std::to_string(fa_) + ", " +
                             std::to_string(fb_)),
          fa(fa_),
          fb(fb_) {}
};

// Plain bisection on [a, b]; stops when |f| <= f_tol or the interval
// shrinks below x_tol.
template <class F>
RootResult bisect(F&& f, double a, double b, double x_tol, double f_tol = 0.0,
                  int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0)) throw BracketError(a, b, fa, fb);

    double m = a, fm = fa;
    int it = 0;
    for (; it < max_iter; ++it) {
        m = 0.5 * (a + b);
        fm = f(m);
        if (std::abs(fm) <= f_tol || std::abs(b - a) <= x_tol) break;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return {m, fm, it};
}

// Brent's method: inverse quadratic interpolation with secant and bisection
// fallbacks. Stops when |f| <= f_tol or the bracket width drops below x_tol.
template <class F>
RootResult brent(F&& f, double a, double b, double x_tol, double f_tol = 0.0,
                 int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0)) throw BracketError(a, b, fa, fb);

    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;
    int it = 0;
    for (; it < max_iter; ++it) {
        if (std::abs(fb) <= f_tol || std::abs(b - a) <= x_tol) break;
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        const double lo = 0.25 * (3.0 * a + b);
        const bool out_of_range = !((s > lo && s < b) || (s < lo && s > b));
        if (out_of_range || (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
            (!mflag && std::abs(s - b) >= 0.5 * std::abs(c - d)) ||
            (mflag && std::abs(b - c) < x_tol) || (!mflag && std::abs(c - d) < x_tol)) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if ((fa > 0.0) != (fs > 0.0)) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return {b, fb, it};
}

}  // namespace bfkpp::rootfind

#endif
