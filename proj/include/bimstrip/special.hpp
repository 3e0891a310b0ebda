#pragma once

#include <cmath>
#include <complex>

namespace bimstrip {

namespace detail {
// z*coth(z) - 1 Maclaurin coefficients (Bernoulli numbers): z^2/3 - z^4/45 + ...
inline constexpr double kZcothC2 = 1.0 / 3.0;
inline constexpr double kZcothC4 = -1.0 / 45.0;
inline constexpr double kZcothC6 = 2.0 / 945.0;
inline constexpr double kZcothC8 = -1.0 / 4725.0;
inline constexpr double kZcothC10 = 2.0 / 93555.0;
}  // namespace detail

/// z*coth(z) - 1, even, entire except poles at i k pi (k != 0).
/// Series below |z| = 0.25; expm1-based form elsewhere; saturates to z - 1
/// for Re z > 350 where the exponential correction is below resolution.
inline double zcothm1(double z) {
    z = std::fabs(z);
    if (z < 0.25) {
        const double z2 = z * z;
        using namespace detail;
        return z2 * (kZcothC2 + z2 * (kZcothC4 + z2 * (kZcothC6 + z2 * (kZcothC8 + z2 * kZcothC10))));
    }
    if (z > 350.0) return z - 1.0;
    return (z - 1.0) + 2.0 * z / std::expm1(2.0 * z);
}

inline std::complex<double> zcothm1(std::complex<double> z) {
    if (z.real() < 0.0) z = -z;  // even
    const double az = std::abs(z);
    if (az < 0.25) {
        const std::complex<double> z2 = z * z;
        using namespace detail;
        return z2 * (kZcothC2 + z2 * (kZcothC4 + z2 * (kZcothC6 + z2 * (kZcothC8 + z2 * kZcothC10))));
    }
    if (z.real() > 350.0) return z - 1.0 + 2.0 * z * std::exp(-2.0 * z);
    return (z - 1.0) + 2.0 * z / (std::exp(2.0 * z) - 1.0);
}

inline std::complex<double> coth(std::complex<double> z) { return (zcothm1(z) + 1.0) / z; }

/// log1p(x)/x extended continuously through x = 0.
inline double log1p_over(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

/// Sine integral Si(x) = int_0^x sin(t)/t dt. Power series for |x| < 18,
/// asymptotic auxiliary-function form beyond (~1e-8 absolute near the
/// crossover, much better for large |x|).
double sine_integral(double x);

}  // namespace bimstrip
