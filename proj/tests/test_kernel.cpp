#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bimstrip/kernel.hpp"
#include "bimstrip/special.hpp"
#include "bimstrip/types.hpp"
#include "bimstrip/verify.hpp"

using namespace bimstrip;
using cplx = std::complex<double>;

namespace {
const StripConfig kSym{1.0, 1.0, 1.0, 1.0, 1.0};
}

TEST_CASE("zcothm1 matches the direct ratio away from the series region") {
    for (double z : {0.3, 1.0, 7.0, 40.0}) {
        const double direct = z * std::cosh(z) / std::sinh(z) - 1.0;
        CHECK(zcothm1(z) == doctest::Approx(direct).epsilon(1e-14));
    }
    // series side against long-double style reference values
    CHECK(zcothm1(1e-3) == doctest::Approx(1e-6 / 3.0).epsilon(1e-9));
    CHECK(zcothm1(0.0) == 0.0);
    // complex continuity across the branch switch
    const cplx z(0.2499, 0.01), z2(0.2501, 0.01);
    CHECK(std::abs(zcothm1(z) - zcothm1(z2)) < 1e-4 * std::abs(zcothm1(z)));
}

TEST_CASE("kernel evenness and realness on the real axis") {
    const double xi0 = 0.7;
    const cplx a = eval_kernel(cplx(xi0, 0.0), kSym);
    const cplx b = eval_kernel(cplx(-xi0, 0.0), kSym);
    CHECK(a.imag() == 0.0);
    CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-15));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 30.0);
    for (int i = 0; i < 50; ++i) {
        const StripConfig cfg = random_config(rng());
        const double x = u(rng) / cfg.h_total();
        const cplx v = eval_kernel(cplx(x, 0.0), cfg);
        const cplx w = eval_kernel(cplx(-x, 0.0), cfg);
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == doctest::Approx(w.real()).epsilon(1e-13));
        CHECK(eval_xi_star(cplx(x, 0.0), cfg).real() ==
              doctest::Approx(eval_xi_star(cplx(-x, 0.0), cfg).real()).epsilon(1e-13));
    }
}

TEST_CASE("kernel small-xi limit recovers eta") {
    // xi^2 Xi(xi) -> eta = 1/(mu1 h1) + 1/(mu2 h2) = 2 for the symmetric cell
    const double xi = 1e-3;
    const cplx v = eval_kernel(cplx(xi, 0.0), kSym);
    CHECK(xi * xi * v.real() == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("kernel large-xi value against direct high-precision evaluation") {
    // at xi = 100: Xi = kappa + (1/mu1 + 1/mu2)/xi up to exponential terms
    const cplx v = eval_kernel(cplx(100.0, 0.0), kSym);
    CHECK(v.real() == doctest::Approx(1.02).epsilon(1e-6));
}

TEST_CASE("kernel rejects xi = 0 and coth poles") {
    CHECK_THROWS_AS(eval_kernel(cplx(0.0, 0.0), kSym), std::domain_error);
    CHECK_THROWS_AS(eval_kernel(cplx(0.0, 3.14159265358979323846), kSym), std::domain_error);
    const KernelParams kp = kernel_params(kSym);
    CHECK_THROWS_AS(eval_xi_star(cplx(0.0, kp.lambda), kSym), std::domain_error);
}

TEST_CASE("regularized kernel limits and asymptote") {
    CHECK(eval_xi_star(cplx(0.0, 0.0), kSym).real() == doctest::Approx(1.0).epsilon(1e-14));

    // Xi*(100) - 1 against the two-term asymptote (mu1+mu2)/(mu1 mu2 kappa t) - lambda^2/t^2
    const double t = 100.0;
    const double asym = 2.0 / t - 2.0 / (t * t);
    const double v = eval_xi_star(cplx(t, 0.0), kSym).real() - 1.0;
    CHECK(std::fabs(v - asym) / asym < 2e-4);
}

TEST_CASE("factorized identity ties Xi, Xi* and lambda pointwise") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(0.01), std::log(50.0));
    const KernelParams kp = kernel_params(kSym);
    for (int i = 0; i < 50; ++i) {
        const double x = std::exp(u(rng));
        const double lhs =
            kSym.kappa * (kp.lambda * kp.lambda + x * x) / (x * x) * eval_xi_star(cplx(x, 0.0), kSym).real();
        const double rhs = eval_kernel(cplx(x, 0.0), kSym).real();
        CHECK(std::fabs(lhs - rhs) / std::fabs(rhs) < 1e-12);
    }
}

TEST_CASE("positivity of Xi* on the real axis") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(std::log(1e-4), std::log(1e4));
    for (int i = 0; i < 20; ++i) {
        const StripConfig cfg = random_config(rng());
        for (int k = 0; k < 25; ++k) {
            const double x = std::exp(u(rng)) / cfg.h_total();
            CHECK(eval_xi_star(cplx(x, 0.0), cfg).real() > 0.0);
        }
    }
}

TEST_CASE("dimensionless kernel: small-t limit of ln Xi**(t)/t^2") {
    DimensionlessParams dp;
    dp.mu_star = 0.0;
    dp.h_star = 0.0;
    dp.kappa_star = 8.0;
    dp.h_total = 1.0;
    dp.lambda_star = lambda_star_closed_form(0.0, 0.0, 8.0);
    CHECK(dp.lambda_star == doctest::Approx(1.0).epsilon(1e-14));

    const KernelShape shape = KernelShape::dimensionless(dp);
    CHECK(shape.log_over_t2_limit() == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(shape.log_over_t2(1e-4) == doctest::Approx(1.0 / 12.0).epsilon(1e-6));

    // closed form of the limit for general contrasts
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(-0.9, 0.9), lk(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
        DimensionlessParams d2;
        d2.mu_star = c(rng);
        d2.h_star = c(rng);
        d2.kappa_star = std::pow(10.0, lk(rng));
        d2.h_total = 1.0;
        d2.lambda_star = lambda_star_closed_form(d2.mu_star, d2.h_star, d2.kappa_star);
        const double ms = d2.mu_star, hs = d2.h_star;
        const double expected = (hs * hs * hs * ms - hs * hs - ms * hs + 1.0) /
                                (12.0 * (1.0 + ms * hs));
        CHECK(KernelShape::dimensionless(d2).log_over_t2_limit() ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("Xi**(t) = Xi*(t/H) consistency across random parameters") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e3));
    for (int i = 0; i < 100; ++i) {
        const StripConfig cfg = random_config(rng());
        const DimensionlessParams dp = nondimensionalize(cfg);
        const double t = std::exp(u(rng));
        const double a = eval_xi_star_star(t, dp);
        const double b = eval_xi_star(cplx(t / dp.h_total, 0.0), cfg).real();
        CHECK(std::fabs(a - b) / b < 1e-12);
        CHECK(eval_xi_star_star(-t, dp) == doctest::Approx(a).epsilon(1e-15));
    }
}

TEST_CASE("specific dimensionless consistency point") {
    DimensionlessParams dp;
    dp.mu_star = 0.5;
    dp.h_star = -0.25;
    dp.kappa_star = 1.0;
    dp.h_total = 0.37;
    dp.lambda_star = lambda_star_closed_form(dp.mu_star, dp.h_star, dp.kappa_star);
    const StripConfig cfg = dimensionalize(dp, dp.h_total, 5.0e9);
    const double a = eval_xi_star_star(3.0, dp);
    const double b = eval_xi_star(cplx(3.0 / dp.h_total, 0.0), cfg).real();
    CHECK(std::fabs(a - b) / b < 1e-12);
}

TEST_CASE("nondimensionalize: resin-bonded Al-Fe cell") {
    // mu1 = 26 GPa (Al), mu2 = 82 GPa (Fe), resin layer kappa = h/mu
    StripConfig cfg;
    cfg.mu1 = 26e9;
    cfg.mu2 = 82e9;
    cfg.h1 = 0.1;
    cfg.h2 = 0.05;
    cfg.kappa = 0.01 / 2.5e9;
    const DimensionlessParams dp = nondimensionalize(cfg);
    CHECK(dp.kappa_star == doctest::Approx(2.88).epsilon(1e-10));

    StripConfig stiff = cfg;
    stiff.kappa = 0.01 / (1000.0 * 2.5e9);
    CHECK(nondimensionalize(stiff).kappa_star == doctest::Approx(2.88e-3).epsilon(1e-10));
    StripConfig soft = cfg;
    soft.kappa = 0.01 / (2.5e9 / 10.0);
    CHECK(nondimensionalize(soft).kappa_star == doctest::Approx(28.8).epsilon(1e-10));
}

TEST_CASE("round trip between physical and dimensionless forms") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const StripConfig cfg = random_config(rng());
        const DimensionlessParams dp = nondimensionalize(cfg);
        const StripConfig back = dimensionalize(dp, cfg.h_total(), cfg.mu1 + cfg.mu2);
        CHECK(back.mu1 == doctest::Approx(cfg.mu1).epsilon(1e-12));
        CHECK(back.mu2 == doctest::Approx(cfg.mu2).epsilon(1e-12));
        CHECK(back.h1 == doctest::Approx(cfg.h1).epsilon(1e-12));
        CHECK(back.h2 == doctest::Approx(cfg.h2).epsilon(1e-12));
        CHECK(back.kappa == doctest::Approx(cfg.kappa).epsilon(1e-12));

        // lambda_star closed form against the physical lambda
        const KernelParams kp = kernel_params(cfg);
        CHECK(kp.lambda * cfg.h_total() == doctest::Approx(dp.lambda_star).epsilon(1e-12));
    }
}

TEST_CASE("symmetric cell gives mu* = h* = 0 and lambda* = 1 at kappa* = 8") {
    StripConfig cfg{3.0e9, 3.0e9, 0.02, 0.02, 0.0};
    cfg.kappa = 8.0 * cfg.h_total() / (cfg.mu1 + cfg.mu2);
    const DimensionlessParams dp = nondimensionalize(cfg);
    CHECK(dp.mu_star == 0.0);
    CHECK(dp.h_star == 0.0);
    CHECK(dp.kappa_star == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(dp.lambda_star == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("degenerate contrasts are rejected") {
    DimensionlessParams dp;
    dp.mu_star = 1.0;
    dp.h_star = 0.0;
    dp.kappa_star = 1.0;
    CHECK_THROWS_AS(dimensionalize(dp, 1.0, 2.0), std::invalid_argument);
    dp.mu_star = 0.0;
    dp.h_star = -1.0;
    CHECK_THROWS_AS(dimensionalize(dp, 1.0, 2.0), std::invalid_argument);

    StripConfig bad{1.0, 1.0, 1.0, 1.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(bad.validate(/*allow_zero_kappa=*/true));
}
