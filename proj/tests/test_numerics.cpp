#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "bimstrip/numerics.hpp"
#include "bimstrip/quadrature.hpp"
#include "bimstrip/special.hpp"

using namespace bimstrip;

TEST_CASE("adaptive GK reproduces closed-form integrals") {
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    auto r = adaptive_gk<double>([](double x) { return std::exp(-x * x); }, -8.0, 8.0, opts);
    CHECK(r.value == doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-12));

    auto osc = adaptive_gk<double>([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, opts);
    CHECK(osc.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-10));

    auto c = adaptive_gk<std::complex<double>>(
        [](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, 3.0, opts);
    CHECK(c.value.real() == doctest::Approx(std::sin(3.0)).epsilon(1e-12));
    CHECK(c.value.imag() == doctest::Approx(1.0 - std::cos(3.0)).epsilon(1e-12));
}

TEST_CASE("adaptive GK reports non-convergence with the worst interval") {
    QuadOptions opts;
    opts.rel_tol = 1e-14;
    opts.max_panels = 8;
    CHECK_THROWS_AS(adaptive_gk<double>([](double x) { return 1.0 / std::sqrt(std::fabs(x) + 1e-300); },
                                        -1.0, 1.0, opts),
                    QuadratureError);
    opts.throw_on_failure = false;
    auto r = adaptive_gk<double>([](double x) { return 1.0 / std::sqrt(std::fabs(x) + 1e-300); },
                                 -1.0, 1.0, opts);
    CHECK_FALSE(r.converged);
}

TEST_CASE("brent finds bracketed roots") {
    auto r = brent([](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(r.root == doctest::Approx(1.5707963267948966).epsilon(1e-14));
    CHECK(r.bracketed);
    auto bad = brent([](double x) { return 1.0 + x * x; }, -1.0, 1.0);
    CHECK_FALSE(bad.bracketed);
}

TEST_CASE("cubic spline interpolates smooth data to fourth order") {
    const int n = 60;
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = -1.0 + 2.0 * i / (n - 1);
        y[i] = std::sin(3.0 * x[i]);
    }
    CubicSpline sp(x, y);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double xx = -0.95 + 1.9 * i / 199.0;
        worst = std::max(worst, std::fabs(sp(xx) - std::sin(3.0 * xx)));
    }
    CHECK(worst < 5e-6);
}

TEST_CASE("least squares recovers exact polynomial coefficients") {
    std::vector<double> x, y;
    for (int i = 0; i < 12; ++i) {
        const double xx = 0.1 * (i + 1);
        x.push_back(xx);
        y.push_back(2.5 - 1.25 * xx + 0.75 * xx * std::log(xx));
    }
    auto c = least_squares(x, y,
                           {[](double) { return 1.0; }, [](double t) { return t; },
                            [](double t) { return t * std::log(t); }});
    CHECK(c[0] == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(c[1] == doctest::Approx(-1.25).epsilon(1e-9));
    CHECK(c[2] == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("sine integral against reference values") {
    // reference values computed with 50-digit arithmetic
    CHECK(sine_integral(1.0) == doctest::Approx(0.94608307036718301494).epsilon(1e-13));
    CHECK(sine_integral(10.0) == doctest::Approx(1.6583475942188740493).epsilon(1e-13));
    CHECK(sine_integral(100.0) == doctest::Approx(1.5622254668890562934).epsilon(1e-12));
    CHECK(sine_integral(17.9) == doctest::Approx(sine_integral(17.9000000001)).epsilon(5e-8));
    CHECK(sine_integral(-1.0) == doctest::Approx(-sine_integral(1.0)).epsilon(1e-15));
    // large-argument limit pi/2
    CHECK(sine_integral(1e6) == doctest::Approx(1.5707963267948966).epsilon(2e-6));
}
