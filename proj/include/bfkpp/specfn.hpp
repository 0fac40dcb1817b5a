#ifndef BFKPP_SPECFN_HPP
#define BFKPP_SPECFN_HPP

// Scalar special functions needed by the closed-form orbits and speed
// coefficients: Lambert W (principal branch), log-Gamma, the non-regularized
// incomplete Beta function, and the Gauss hypergeometric 2F1 restricted to
// the c = a+1 parameter family, where it reduces to an incomplete Beta.
//
// All functions are pure and thread-safe; domain violations throw
// std::domain_error.

namespace bfkpp::specfn {

// Principal branch W0 of the Lambert W function, defined by w*exp(w) = x.
// Valid for x >= -1/e; W0 >= -1. Halley iteration from a branch-appropriate
// seed; defining-equation residual is at machine-precision level.
double lambert_w0(double x);

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
double ln_gamma(double x);

// Gamma(x) for x > 0.
double gamma_fn(double x);

// Non-regularized incomplete Beta B_x(a,b) = int_0^x t^(a-1) (1-t)^(b-1) dt
// for x in [0,1], a > 0, b > 0. Continued fraction with the symmetry swap
// at x > (a+1)/(a+b+2); handles the integrable endpoint singularity b < 1.
double inc_beta(double x, double a, double b);

// Complete Beta B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b).
double beta_fn(double a, double b);

// Gauss hypergeometric 2F1(a, b, a+1, x) on x in [0,1], via
// 2F1(a,b,a+1,x) = a x^(-a) B_x(a, 1-b). At x = 1 Gauss's summation
// Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)) applies and needs 1-b > 0.
// The third argument must equal a+1 (the only family used here).
double hyp2f1_via_beta(double a, double b, double c, double x);

}  // namespace bfkpp::specfn

#endif
