#pragma once

#include <complex>

#include "bimstrip/types.hpp"

namespace bimstrip {

/// Common shape of the regularized kernel in physical and dimensionless form:
///
///   K(t) = N(t) / D(t),   N(t) = A + c1*zcothm1(s1 t) + c2*zcothm1(s2 t) + w t^2,
///   D(t) = A + w t^2,     A = c1 + c2 = w * lambda_hat^2.
///
/// Physical Xi*(t):      c1 = mu1/h2, s1 = h2, c2 = mu2/h1, s2 = h1, w = mu1 mu2 kappa.
/// Dimensionless Xi**(t): c_j = q_j/beta_j with q_j = 2/(kappa*(1 +/- mu*)),
///                        beta_j = (1 +/- h*)/2, w = 1.
/// Both give K -> 1 at t -> 0 and |t| -> oo, K > 0 and even on the real axis,
/// and the exact large-t model K(t) = (1 + P/t)/(1 + lambda_hat^2/t^2) up to
/// exponentially small coth corrections, with P = (c1 s1 + c2 s2)/w.
struct KernelShape {
    double c1, s1, c2, s2, w;
    double big_a;       // A = c1 + c2
    double lambda_hat;  // sqrt(A/w)
    double tail_p;      // P

    static KernelShape physical(const StripConfig& cfg);
    static KernelShape dimensionless(const DimensionlessParams& dp);

    /// K(t) - 1 on the real axis, free of cancellation for all t.
    double em1(double t) const;
    double value(double t) const;                       // K(t)
    std::complex<double> value(std::complex<double> t) const;  // throws at t = +/- i lambda_hat
    double log_value(double t) const;                   // ln K(t)
    double log_over_t2(double t) const;                 // ln K(t)/t^2, finite at t = 0
    double log_over_t2_limit() const;                   // its t -> 0 value

    /// Characteristic |t| features for quadrature splitting.
    double scale_min() const;
    double scale_max() const;
};

/// Wiener-Hopf kernel Xi(xi) = (1/xi)(coth(xi h1)/mu1 + coth(xi h2)/mu2 + kappa xi).
/// Real and even for real xi; domain error at xi = 0 and at coth poles.
std::complex<double> eval_kernel(std::complex<double> xi, const StripConfig& cfg);

/// Regularized factor Xi*(xi) = xi^2 Xi(xi) / (kappa (lambda^2 + xi^2)), with the
/// removable points filled by series. Domain error at xi = +/- i lambda.
std::complex<double> eval_xi_star(std::complex<double> xi, const StripConfig& cfg);

/// Dimensionless kernel Xi**(t) = Xi*(t/H) evaluated through its own closed form.
double eval_xi_star_star(double t, const DimensionlessParams& dp);

}  // namespace bimstrip
