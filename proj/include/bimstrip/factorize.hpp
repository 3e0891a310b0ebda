#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "bimstrip/constants.hpp"
#include "bimstrip/kernel.hpp"
#include "bimstrip/quadrature.hpp"
#include "bimstrip/types.hpp"

namespace bimstrip {

/// Large-|t| model of an even log-kernel: ln K(t) ~ ln(1+p/t) + ln(1+num2/t^2)
/// - ln(1+den2/t^2), valid (up to exponentially small terms) beyond the cutoff.
struct CauchyTailModel {
    double p = 0.0;
    double num2 = 0.0;
    double den2 = 0.0;

    std::complex<double> log_at(std::complex<double> t) const;
};

/// Even, positive kernel K on the real axis described through its logarithm,
/// as consumed by the half-plane factorizer. log_complex and value_complex are
/// needed only for shifted contours and for continuation below the axis.
struct EvenLogKernel {
    std::function<double(double)> log_at;  // ln K(t), t >= 0
    std::function<std::complex<double>(std::complex<double>)> value_complex;
    CauchyTailModel tail;
    double tail_cutoff = 0.0;
    std::vector<double> scales;  // characteristic |t| features
};

/// Multiplicative half-plane splitting of an even positive kernel via the
/// Cauchy integral Theta(xi) = int ln K(t)/(t - xi) dt taken along the real
/// axis (principal value + half residue on the axis itself) or along a
/// contour shifted below it. plus(xi) = exp(Theta(xi)/(2 pi i)).
class CauchyFactorizer {
public:
    CauchyFactorizer(EvenLogKernel kernel, double quad_tol = 1e-9);

    /// Theta(xi) for Im xi >= 0. Exactly zero at xi = 0 (odd integrand).
    std::complex<double> theta(std::complex<double> xi) const;
    QuadResult<std::complex<double>> theta_diag(std::complex<double> xi) const;

    /// Contour Im t = -beta, valid for Im xi > -beta; used to audit
    /// beta-independence against the principal-value path.
    std::complex<double> theta_shifted(std::complex<double> xi, double beta) const;

    /// K+(xi) on the closed upper half-plane; below the axis (within the strip
    /// of analyticity of K) by the continuation K+(xi) = K(xi)/K+(-xi).
    std::complex<double> plus(std::complex<double> xi) const;

    const EvenLogKernel& kernel() const { return kernel_; }
    double quad_tol() const { return quad_tol_; }

private:
    QuadResult<std::complex<double>> half_axis_integral(std::complex<double> xi) const;
    QuadResult<std::complex<double>> tail_integral(std::complex<double> xi, double cutoff) const;

    EvenLogKernel kernel_;
    double quad_tol_;
    double log_scale_;  // typical |ln K| for absolute tolerance floors
};

struct AsymptoticsReport {
    std::complex<double> zero_coeff_measured{};  // d(K+)/dxi at 0, Richardson on the +i axis
    std::complex<double> zero_coeff_target{};    // alpha/(pi i)
    double zero_rel_dev = 0.0;
    std::complex<double> inf_coeff_measured{};   // coefficient of ln(-i xi)/xi in K+ - 1
    std::complex<double> inf_coeff_target{};     // +i (mu1+mu2)/(pi mu1 mu2 kappa); see note in factorize.cpp
    double inf_rel_dev = 0.0;
    double inf_magnitude_ratio = 0.0;            // |measured|/|target|
    double probe_height = 0.0;                   // Y with probe xi = iY
    double identity_error = 0.0;                 // worst |K+ conj(K+) - K|/K on a real-axis grid
    long evals = 0;
};

/// Wiener-Hopf factorization of the regularized strip kernel. Immutable after
/// construction; all evaluation methods are const and thread-safe.
class Factorization {
public:
    explicit Factorization(const StripConfig& cfg, FactorizationSettings settings = {});

    std::complex<double> theta_plus(std::complex<double> xi) const;
    QuadResult<std::complex<double>> theta_plus_diag(std::complex<double> xi) const;
    std::complex<double> plus(std::complex<double> xi) const;
    std::complex<double> minus(std::complex<double> xi) const { return plus(-xi); }

    double xi_star(double t) const { return shape_.value(t); }
    std::complex<double> xi_star(std::complex<double> xi) const { return shape_.value(xi); }

    double alpha() const { return alpha_; }
    double lambda() const { return lambda_; }
    double eta() const { return eta_; }
    double gamma_plus() const { return gamma_plus_; }
    double gamma_minus() const { return gamma_minus_; }
    /// Half-width of the strip where K is analytic and zero-free:
    /// min(gamma_plus, lambda, gamma_minus), gamma_plus located numerically.
    double strip_half_width() const { return strip_half_width_; }

    const StripConfig& config() const { return cfg_; }
    const FactorizationSettings& settings() const { return settings_; }
    const KernelShape& shape() const { return shape_; }
    const CauchyFactorizer& factorizer() const { return factorizer_; }

    AsymptoticsReport verify_asymptotics() const;

private:
    StripConfig cfg_;
    FactorizationSettings settings_;
    KernelShape shape_;
    CauchyFactorizer factorizer_;
    double alpha_ = 0.0;
    double eta_ = 0.0;
    double lambda_ = 0.0;
    double gamma_plus_ = 0.0;
    double gamma_minus_ = 0.0;
    double strip_half_width_ = 0.0;
};

}  // namespace bimstrip
