#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "bimstrip/factorize.hpp"
#include "bimstrip/numerics.hpp"

namespace bimstrip {

/// Explicit transform-side objects of the solved problem, normalized so that
/// xi^2 ybar_j -> C_j at the origin (amplitude kappa*lambda absorbed).
class Transforms {
public:
    Transforms(const StripConfig& cfg, const Factorization& fact);

    /// -lambda / ((lambda - i xi) K+(xi)); analytic above -gamma_plus.
    std::complex<double> phi_plus(std::complex<double> xi) const;
    /// kappa lambda (lambda + i xi) K+(-xi) / xi^2; analytic below gamma_plus
    /// apart from the double pole at 0.
    std::complex<double> phi_minus(std::complex<double> xi) const;

    /// Transform of the weight function in material j (1 above, 2 below) and
    /// of its Y-derivative. xi must lie in the strip -gamma_plus < Im xi <
    /// gamma_minus, xi != 0; out-of-strip arguments are rejected.
    std::complex<double> ybar(std::complex<double> xi, double y, int material) const;
    std::complex<double> ybar_dy(std::complex<double> xi, double y, int material) const;

    const StripConfig& config() const { return cfg_; }
    const Factorization& factorization() const { return *fact_; }

private:
    void check_strip(std::complex<double> xi, bool mirror) const;

    StripConfig cfg_;
    const Factorization* fact_;
    double lambda_;
};

/// Boundary values of ln K+ along the line Im xi = -beta0 (beta0 >= 0),
/// cached on an asinh-graded grid and spline-interpolated; the reflection
/// K+(-s - i beta0) = conj K+(s - i beta0) covers negative s.
class FactorLine {
public:
    FactorLine(const Factorization& fact, double beta0, double s_max, int nodes = 0);

    std::complex<double> log_plus(double s) const;
    std::complex<double> plus(double s) const;

    double beta0() const { return beta0_; }
    double s_max() const { return s_max_; }
    double interp_error() const { return interp_error_; }

private:
    double beta0_;
    double s_max_;
    double scale_;
    double interp_error_;
    CubicSpline re_, im_;
};

struct FieldSettings {
    double beta0 = 0.0;        // contour offset; 0 selects a per-group automatic choice
    double tol = 1e-6;         // relative quadrature target per point
    double r_min_factor = 1e-3;  // tip exclusion radius in units of min(h1, h2)
    double cutoff = 0.0;       // |Re xi| truncation; 0 = automatic per point group
};

struct FieldPoint {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
    double error = 0.0;          // quadrature + truncation estimate
    bool slow_convergence = false;
};

struct ContourInfo {
    double beta0 = 0.0;
    double s_max = 0.0;
    std::size_t n_points = 0;
};

struct FieldSample {
    std::vector<FieldPoint> points;
    double contour_offset = 0.0;  // representative beta0 (first contour used)
    double truncation = 0.0;      // largest |Re xi| cutoff used
    std::vector<ContourInfo> contours;
};

/// Inverse transform of the weight function on the given (X, Y) points.
/// Material is chosen by the sign of Y (Y = 0 evaluates the upper face).
/// Points inside the tip exclusion disc are rejected.
FieldSample invert_field(const std::vector<std::array<double, 2>>& points, const StripConfig& cfg,
                         const Factorization& fact, const FieldSettings& settings = {});

/// Same contour machinery for the Y-derivative of the field.
FieldSample invert_field_dy(const std::vector<std::array<double, 2>>& points,
                            const StripConfig& cfg, const Factorization& fact,
                            const FieldSettings& settings = {});

struct NearTipReport {
    double flux_limit = 0.0;       // extrapolated mu1 dY/dy at (0+, 0)
    double flux_target = 0.0;      // -lambda
    double flux_rel_dev = 0.0;
    double flux_negative_side = 0.0;  // |f(x)| for x < 0, should vanish
    double jump_limit = 0.0;       // extrapolated [Y](X -> 0-)
    double jump_target = 0.0;      // -kappa lambda
    double jump_rel_dev = 0.0;
    double tip_value_measured = 0.0;  // Y_1(0+, 0) from the R -> 0 fit
    double tip_value_target = 0.0;    // -kappa lambda mu2/(mu1+mu2)
    double b0_fitted = 0.0;        // length scale of the R ln R term
    double rlnr_slope = 0.0;       // normalized R ln R coefficient, ~ +1
};

NearTipReport near_tip_check(const StripConfig& cfg, const Factorization& fact,
                             const FieldSettings& settings = {});

struct TheoremBSettings {
    double cutoff = 2e4;            // |t| truncation of the inversion integral
    std::array<double, 3> probes = {0.04, 0.02, 0.01};  // x_k, in units of 1/scale
    double scale = 1.0;             // characteristic 1/|t| scale of the transform
    double negative_probe = 1.0;    // x < 0 checkpoint, same units
    double tol = 1e-8;
};

struct TheoremBReport {
    std::complex<double> limit{};          // extrapolated f(0+)
    std::complex<double> target{};         // -i a1
    double rel_dev = 0.0;
    double negative_side_abs = 0.0;        // |f(-negative_probe/scale)|
    std::array<std::complex<double>, 3> probe_values{};
};

/// Numerical check of the one-sided inversion limit: for transform(t) analytic
/// in the upper half-plane with transform ~ a1/t, f(x) = (1/2pi) int transform
/// e^{-ixt} dt tends to -i a1 as x -> 0+ and vanishes for x < 0.
TheoremBReport theorem_b_oracle(const std::function<std::complex<double>(double)>& transform,
                                std::complex<double> a1, const TheoremBSettings& settings = {});

/// Inversion of the minus-side transform combination
/// ybar_1 - ybar_2 - kappa mu1 d_Y ybar_1 (= phi_minus) at X > 0; the result
/// should vanish, which exercises the analyticity split directly.
double transmission_residual(double x, const StripConfig& cfg, const Factorization& fact,
                             const FactorLine& line, double cutoff, double tol = 1e-8);

}  // namespace bimstrip
