#pragma once

#include <stdexcept>
#include <string>

namespace bimstrip {

/// Physical description of the bi-material strip. SI units throughout:
/// shear moduli in Pa, thicknesses in m, interface compliance kappa in m/Pa.
struct StripConfig {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double kappa = 0.0;

    double h_total() const { return h1 + h2; }

    /// Throws std::invalid_argument with a field-level message on bad input.
    /// kappa = 0 names the perfect-interface limit; it is accepted only where
    /// a caller explicitly opts in (the dispersion-root and alpha_P paths).
    void validate(bool allow_zero_kappa = false) const;
};

/// Dimensionless strip parameters: contrasts in (-1,1), kappa_star > 0.
/// h_total keeps the reference length so physical quantities can be recovered.
struct DimensionlessParams {
    double mu_star = 0.0;
    double h_star = 0.0;
    double kappa_star = 0.0;
    double h_total = 1.0;
    double lambda_star = 0.0;

    void validate(bool allow_zero_kappa = false) const;
};

/// Scalars read directly off the kernel: eta = 1/(mu1 h1) + 1/(mu2 h2),
/// lambda = sqrt((mu1 h1 + mu2 h2)/(mu1 mu2 h1 h2 kappa)). Note lambda^2 = eta/kappa.
struct KernelParams {
    double eta = 0.0;
    double lambda = 0.0;
};

KernelParams kernel_params(const StripConfig& cfg);

double lambda_star_closed_form(double mu_star, double h_star, double kappa_star);

DimensionlessParams nondimensionalize(const StripConfig& cfg);

/// Inverse map; h_total and mu_total (= mu1 + mu2) fix the scales.
StripConfig dimensionalize(const DimensionlessParams& dp, double h_total, double mu_total);

}  // namespace bimstrip
