#pragma once

#include <array>
#include <string>

#include "bimstrip/kernel.hpp"
#include "bimstrip/types.hpp"

namespace bimstrip {

/// Numerical controls shared by the Cauchy-integral machinery. beta is a
/// contour offset below the real axis (0 selects the principal-value path),
/// tail_cutoff the truncation point in t*H units (0 = auto).
struct FactorizationSettings {
    double beta = 0.0;
    double tail_cutoff = 0.0;
    double quad_tol = 1e-9;
    bool tail_correction = true;

    double resolved_cutoff(const KernelShape& shape) const;
};

struct AlphaResult {
    double alpha = 0.0;       // m
    double alpha_star = 0.0;  // alpha / (h1 + h2)
    double error = 0.0;
    long evals = 0;
};

/// alpha = int_0^inf ln Xi*(t)/t^2 dt, physical-units quadrature.
AlphaResult alpha_integral(const StripConfig& cfg, const FactorizationSettings& settings = {});

/// Same integral in the dimensionless variable, through Xi** directly.
AlphaResult alpha_star_integral(const DimensionlessParams& dp,
                                const FactorizationSettings& settings = {});

struct GammaPlusResult {
    double gamma_plus = 0.0;  // 1/m
    double residual = 0.0;    // dispersion relation value at the root
    std::string regime;       // "cot-dominated" or "kappa-dominated"
};

/// Smallest positive root of cot(g h1)/mu1 + cot(g h2)/mu2 - kappa g = 0;
/// kappa = 0 (perfect interface) is allowed here.
GammaPlusResult gamma_plus_root(const StripConfig& cfg);

double gamma_minus(const StripConfig& cfg);

/// Perfect-interface constant alpha_P(mu*, h*); kappa is not involved.
double alpha_perfect(const DimensionlessParams& dp, double rel_tol = 1e-10);

/// alpha_I = -((1/pi) int_0^inf ln Xi**(t)/t^2 dt + 1/lambda*).
double alpha_imperfect(const DimensionlessParams& dp, const FactorizationSettings& settings = {});

struct AsymptoticConstants {
    double eta = 0.0;
    double lambda = 0.0;
    double alpha = 0.0;
    double alpha_star = 0.0;
    std::array<double, 2> c{};  // C1, C2 far-field slopes
    std::array<double, 2> d{};  // D1, D2 far-field offsets
    double a0 = 0.0;            // near-tip flux constant, = lambda
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double alpha_imperfect = 0.0;
    double alpha_perfect = 0.0;
};

AsymptoticConstants compute_constants(const StripConfig& cfg,
                                      const FactorizationSettings& settings = {});

struct JunctionCoefficients {
    double opening_to_jump = 0.0;       // alpha/pi + 1/lambda (m)
    double weight2 = 0.0;               // mu2 h2 / (mu1 h1 + mu2 h2)
    double weight3 = 0.0;               // mu1 h1 / (mu1 h1 + mu2 h2)
    double tip_amplitude_factor = 0.0;  // 1/(kappa lambda)
    double alpha_i_normalized = 0.0;    // == alpha_imperfect
};

JunctionCoefficients junction_coefficients(const StripConfig& cfg, const AsymptoticConstants& ac);

struct JunctionMatrix {
    std::array<std::array<double, 4>, 4> m{};
    double det = 0.0;              // numerically evaluated
    double det_closed_form = 0.0;  // -mu1^2 mu2^2 h1^2 h2^2 (C1 - C2)^2
};

JunctionMatrix junction_matrix(const StripConfig& cfg, const AsymptoticConstants& ac);

struct JunctionFirstOrder {
    double v2_first = 0.0;
    double v3_first = 0.0;
    double tip_amplitude = 0.0;  // a_(1)^(W) = delta/(kappa lambda)
};

/// First-order junction conditions: given the zero-order slope jump
/// delta = (v2^0)' - (v3^0)' and the reference value v4^1.
JunctionFirstOrder junction_apply(double delta_v_prime, double v4_first, const StripConfig& cfg,
                                  const AsymptoticConstants& ac);

struct ZeroOrderResiduals {
    double continuity2 = 0.0;  // v2^0 - v4^0
    double continuity3 = 0.0;  // v3^0 - v4^0
    double flux_balance = 0.0; // (mu1 h1 + mu2 h2)(v4^0)' - mu1 h1 (v2^0)' - mu2 h2 (v3^0)'
};

ZeroOrderResiduals junction_zero_order_residuals(double v2, double v3, double v4, double dv2,
                                                 double dv3, double dv4, const StripConfig& cfg);

struct SingularLimits {
    double jump_estimate = 0.0;   // sqrt(eta kappa)
    double flux_estimate = 0.0;   // -sqrt(eta/kappa)
    double ratio = 0.0;           // kappa*lambda / sqrt(eta kappa); identically 1
};

SingularLimits singular_limits(const StripConfig& cfg);

}  // namespace bimstrip
