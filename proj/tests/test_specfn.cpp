#include "bfkpp/specfn.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace bfkpp::specfn;

TEST_CASE("lambert_w0 anchor values") {
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));

    // converged fixed-point oracle, frozen
    const double omega = oracles::lambert_fixed_point(1.0);
    CHECK(omega == doctest::Approx(0.5671432904097838).epsilon(1e-15));
    CHECK(lambert_w0(1.0) == doctest::Approx(omega).epsilon(1e-14));
}

TEST_CASE("lambert_w0 branch point and domain") {
    CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(lambert_w0(10.0) >= -1.0);
    CHECK_THROWS_AS(lambert_w0(-0.4), std::domain_error);
    CHECK_THROWS_AS(lambert_w0(std::nan("")), std::domain_error);
}

TEST_CASE("lambert_w0 defining equation on [-1/e, 10]") {
    const double lo = -std::exp(-1.0);
    for (int i = 0; i <= 1000; ++i) {
        const double x = lo + (10.0 - lo) * i / 1000.0;
        const double w = lambert_w0(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
        CHECK(w >= -1.0);
    }
    // large arguments, as used by the pulled singular orbit
    for (double x : {1e2, 1e4, 1e8, 1e12}) {
        const double w = lambert_w0(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * x);
    }
}

TEST_CASE("ln_gamma anchors and reflection") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(std::log(std::sqrt(M_PI))).epsilon(1e-14));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));

    // Gamma(1+x) Gamma(1-x) = pi x / sin(pi x) at x = 0.25
    CHECK(gamma_fn(1.25) * gamma_fn(0.75) ==
          doctest::Approx(M_PI * 0.25 / std::sin(M_PI * 0.25)).epsilon(1e-13));

    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        const double lhs = gamma_fn(1.0 + x) * gamma_fn(1.0 - x) * std::sin(M_PI * x) / (M_PI * x);
        CHECK(std::abs(lhs - 1.0) <= 1e-11);
    }
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("ln_gamma recurrence on (0, 3]") {
    for (int i = 1; i <= 60; ++i) {
        const double x = 0.05 * i;
        CHECK(ln_gamma(x + 1.0) == doctest::Approx(ln_gamma(x) + std::log(x)).epsilon(1e-12));
    }
}

TEST_CASE("inc_beta anchors") {
    CHECK(inc_beta(0.0, 1.25, 0.75) == 0.0);
    CHECK(inc_beta(0.0, 3.0, 0.2) == 0.0);
    // complete Beta at x = 1, including the b < 1 endpoint singularity
    CHECK(inc_beta(1.0, 1.25, 0.75) ==
          doctest::Approx(gamma_fn(1.25) * gamma_fn(0.75) / gamma_fn(2.0)).epsilon(1e-13));

    // quadrature oracle at tolerance 1e-13, frozen
    const double q = oracles::inc_beta_quad(0.5, 1.25, 0.75);
    CHECK(q == doctest::Approx(0.3669729873399110).epsilon(1e-12));
    CHECK(inc_beta(0.5, 1.25, 0.75) == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("inc_beta vs quadrature across parameters") {
    for (double a : {0.5, 1.0, 1.25, 2.5}) {
        for (double b : {0.25, 0.75, 1.0, 1.4}) {
            for (double x : {0.1, 0.5, 0.9}) {
                const double want = oracles::inc_beta_quad(x, a, b);
                CHECK(std::abs(inc_beta(x, a, b) - want) <= 1e-11);
            }
        }
    }
}

TEST_CASE("inc_beta monotone in x and domain checks") {
    double prev = 0.0;
    for (int i = 1; i <= 40; ++i) {
        const double v = inc_beta(i / 40.0, 1.25, 0.75);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK_THROWS_AS(inc_beta(-0.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(inc_beta(1.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(inc_beta(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(inc_beta(0.5, 1.0, -2.0), std::domain_error);
}

TEST_CASE("hyp2f1_via_beta anchors") {
    CHECK(hyp2f1_via_beta(1.25, 0.25, 2.25, 0.0) == 1.0);

    // Gauss summation at x = 1 (parameters 1+4/k^2, 4/k^2, 2+4/k^2 at k = 4)
    const double gauss = gamma_fn(2.25) * gamma_fn(0.75) / (gamma_fn(1.0) * gamma_fn(2.0));
    CHECK(hyp2f1_via_beta(1.25, 0.25, 2.25, 1.0) == doctest::Approx(gauss).epsilon(1e-13));

    // series oracle (>= 200 terms), frozen
    const double s = oracles::hyp2f1_series(1.25, 0.25, 2.25, 0.5);
    CHECK(s == doctest::Approx(1.0910172188960641).epsilon(1e-14));
    CHECK(hyp2f1_via_beta(1.25, 0.25, 2.25, 0.5) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("hyp2f1_via_beta agrees with the series for x <= 0.9") {
    for (double k : {2.1, 2.5, 3.0, 4.0, 6.0, 10.0}) {
        const double q = 4.0 / (k * k);
        for (int i = 0; i <= 18; ++i) {
            const double x = 0.05 * i;
            const double want = oracles::hyp2f1_series(1.0 + q, q, 2.0 + q, x);
            CHECK(std::abs(hyp2f1_via_beta(1.0 + q, q, 2.0 + q, x) - want) <= 1e-10);
        }
    }
}

TEST_CASE("hyp2f1_via_beta domain errors") {
    CHECK_THROWS_AS(hyp2f1_via_beta(1.25, 0.25, 2.5, 0.5), std::domain_error);   // c != a+1
    CHECK_THROWS_AS(hyp2f1_via_beta(1.25, 1.5, 2.25, 1.0), std::domain_error);   // divergent
    CHECK_THROWS_AS(hyp2f1_via_beta(-1.0, 0.25, 0.0, 0.5), std::domain_error);   // a <= 0
    CHECK_THROWS_AS(hyp2f1_via_beta(1.25, 0.25, 2.25, 1.5), std::domain_error);  // x > 1
}
