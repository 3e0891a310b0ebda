#include "bimstrip/types.hpp"

#include <cmath>

namespace bimstrip {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void StripConfig::validate(bool allow_zero_kappa) const {
    require(std::isfinite(mu1) && mu1 > 0.0, "mu1 must be positive and finite");
    require(std::isfinite(mu2) && mu2 > 0.0, "mu2 must be positive and finite");
    require(std::isfinite(h1) && h1 > 0.0, "h1 must be positive and finite");
    require(std::isfinite(h2) && h2 > 0.0, "h2 must be positive and finite");
    require(std::isfinite(kappa), "kappa must be finite");
    if (allow_zero_kappa)
        require(kappa >= 0.0, "kappa must be non-negative");
    else
        require(kappa > 0.0, "kappa must be positive (kappa = 0 is the perfect-interface case)");
}

void DimensionlessParams::validate(bool allow_zero_kappa) const {
    require(std::isfinite(mu_star) && std::fabs(mu_star) < 1.0, "mu_star out of range (-1, 1)");
    require(std::isfinite(h_star) && std::fabs(h_star) < 1.0, "h_star out of range (-1, 1)");
    require(std::isfinite(h_total) && h_total > 0.0, "h_total must be positive");
    require(std::isfinite(kappa_star), "kappa_star must be finite");
    if (allow_zero_kappa)
        require(kappa_star >= 0.0, "kappa_star must be non-negative");
    else
        require(kappa_star > 0.0, "kappa_star must be positive");
}

KernelParams kernel_params(const StripConfig& cfg) {
    cfg.validate();
    KernelParams kp;
    kp.eta = 1.0 / (cfg.mu1 * cfg.h1) + 1.0 / (cfg.mu2 * cfg.h2);
    kp.lambda = std::sqrt((cfg.mu1 * cfg.h1 + cfg.mu2 * cfg.h2) /
                          (cfg.mu1 * cfg.mu2 * cfg.h1 * cfg.h2 * cfg.kappa));
    return kp;
}

double lambda_star_closed_form(double mu_star, double h_star, double kappa_star) {
    return std::sqrt(8.0 * (1.0 + mu_star * h_star) /
                     (kappa_star * (1.0 - mu_star * mu_star) * (1.0 - h_star * h_star)));
}

DimensionlessParams nondimensionalize(const StripConfig& cfg) {
    cfg.validate();
    DimensionlessParams dp;
    dp.h_total = cfg.h1 + cfg.h2;
    dp.h_star = (cfg.h1 - cfg.h2) / dp.h_total;
    dp.mu_star = (cfg.mu1 - cfg.mu2) / (cfg.mu1 + cfg.mu2);
    dp.kappa_star = cfg.kappa * (cfg.mu1 + cfg.mu2) / dp.h_total;
    dp.lambda_star = lambda_star_closed_form(dp.mu_star, dp.h_star, dp.kappa_star);
    dp.validate();
    return dp;
}

StripConfig dimensionalize(const DimensionlessParams& dp, double h_total, double mu_total) {
    dp.validate();
    require(std::isfinite(h_total) && h_total > 0.0, "h_total must be positive");
    require(std::isfinite(mu_total) && mu_total > 0.0, "mu_total must be positive");
    StripConfig cfg;
    cfg.h1 = 0.5 * h_total * (1.0 + dp.h_star);
    cfg.h2 = 0.5 * h_total * (1.0 - dp.h_star);
    cfg.mu1 = 0.5 * mu_total * (1.0 + dp.mu_star);
    cfg.mu2 = 0.5 * mu_total * (1.0 - dp.mu_star);
    cfg.kappa = dp.kappa_star * h_total / mu_total;
    cfg.validate();
    return cfg;
}

}  // namespace bimstrip
