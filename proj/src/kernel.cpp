#include "bimstrip/kernel.hpp"

#include <cmath>

#include "bimstrip/special.hpp"

namespace bimstrip {

KernelShape KernelShape::physical(const StripConfig& cfg) {
    cfg.validate();
    KernelShape k;
    k.c1 = cfg.mu1 / cfg.h2;
    k.s1 = cfg.h2;
    k.c2 = cfg.mu2 / cfg.h1;
    k.s2 = cfg.h1;
    k.w = cfg.mu1 * cfg.mu2 * cfg.kappa;
    k.big_a = k.c1 + k.c2;
    k.lambda_hat = std::sqrt(k.big_a / k.w);
    k.tail_p = (k.c1 * k.s1 + k.c2 * k.s2) / k.w;
    return k;
}

KernelShape KernelShape::dimensionless(const DimensionlessParams& dp) {
    dp.validate();
    KernelShape k;
    const double b1 = 0.5 * (1.0 + dp.h_star);
    const double b2 = 0.5 * (1.0 - dp.h_star);
    const double q1 = 2.0 / (dp.kappa_star * (1.0 + dp.mu_star));
    const double q2 = 2.0 / (dp.kappa_star * (1.0 - dp.mu_star));
    k.c1 = q1 / b1;
    k.s1 = b1;
    k.c2 = q2 / b2;
    k.s2 = b2;
    k.w = 1.0;
    k.big_a = k.c1 + k.c2;
    k.lambda_hat = std::sqrt(k.big_a);
    k.tail_p = q1 + q2;
    return k;
}

double KernelShape::em1(double t) const {
    return (c1 * zcothm1(s1 * t) + c2 * zcothm1(s2 * t)) / (big_a + w * t * t);
}

double KernelShape::value(double t) const { return 1.0 + em1(t); }

std::complex<double> KernelShape::value(std::complex<double> t) const {
    const std::complex<double> den = big_a + w * t * t;
    if (den == std::complex<double>(0.0, 0.0))
        throw std::domain_error("regularized kernel pole at t = +/- i*lambda");
    const std::complex<double> e = (c1 * zcothm1(s1 * t) + c2 * zcothm1(s2 * t)) / den;
    return 1.0 + e;
}

double KernelShape::log_value(double t) const { return std::log1p(em1(t)); }

double KernelShape::log_over_t2(double t) const {
    // E/t^2 with the series-level division done before forming E keeps the
    // t -> 0 limit exact; log1p_over supplies ln(1+E)/E.
    const double z1 = s1 * t, z2 = s2 * t;
    if (std::fabs(z1) < 0.25 && std::fabs(z2) < 0.25) {
        using namespace detail;
        auto zc_over = [](double s, double z) {
            const double u = z * z;
            return s * s *
                   (kZcothC2 + u * (kZcothC4 + u * (kZcothC6 + u * (kZcothC8 + u * kZcothC10))));
        };
        const double q = (c1 * zc_over(s1, z1) + c2 * zc_over(s2, z2)) / (big_a + w * t * t);
        return q * log1p_over(q * t * t);
    }
    return std::log1p(em1(t)) / (t * t);
}

double KernelShape::log_over_t2_limit() const { return (c1 * s1 * s1 + c2 * s2 * s2) / (3.0 * big_a); }

double KernelShape::scale_min() const {
    return std::min({1.0 / s1, 1.0 / s2, lambda_hat});
}

double KernelShape::scale_max() const {
    return std::max({1.0 / s1, 1.0 / s2, lambda_hat});
}

std::complex<double> eval_kernel(std::complex<double> xi, const StripConfig& cfg) {
    cfg.validate();
    if (xi == std::complex<double>(0.0, 0.0))
        throw std::domain_error("kernel has a double pole at xi = 0");
    std::complex<double> v;
    if (xi.imag() == 0.0) {
        const double x = xi.real();
        const double ch1 = (1.0 + zcothm1(x * cfg.h1)) / (x * cfg.h1);
        const double ch2 = (1.0 + zcothm1(x * cfg.h2)) / (x * cfg.h2);
        v = (ch1 / cfg.mu1 + ch2 / cfg.mu2 + cfg.kappa * x) / x;
    } else {
        v = (coth(xi * cfg.h1) / cfg.mu1 + coth(xi * cfg.h2) / cfg.mu2 + cfg.kappa * xi) / xi;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::domain_error("kernel evaluated at a coth pole");
    return v;
}

std::complex<double> eval_xi_star(std::complex<double> xi, const StripConfig& cfg) {
    const KernelShape k = KernelShape::physical(cfg);
    if (xi.imag() == 0.0) return {k.value(xi.real()), 0.0};
    const std::complex<double> v = k.value(xi);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::domain_error("regularized kernel evaluated at a coth pole");
    return v;
}

double eval_xi_star_star(double t, const DimensionlessParams& dp) {
    return KernelShape::dimensionless(dp).value(t);
}

}  // namespace bimstrip
