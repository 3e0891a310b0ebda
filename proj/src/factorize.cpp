#include "bimstrip/factorize.hpp"

#include <cmath>

#include "bimstrip/special.hpp"

namespace bimstrip {

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);

}  // namespace

std::complex<double> CauchyTailModel::log_at(std::complex<double> t) const {
    std::complex<double> v = 0.0;
    if (p != 0.0) v += std::log(1.0 + p / t);
    if (num2 != 0.0) v += std::log(1.0 + num2 / (t * t));
    if (den2 != 0.0) v -= std::log(1.0 + den2 / (t * t));
    return v;
}

CauchyFactorizer::CauchyFactorizer(EvenLogKernel kernel, double quad_tol)
    : kernel_(std::move(kernel)), quad_tol_(quad_tol) {
    log_scale_ = 1e-30;
    for (double s : kernel_.scales) log_scale_ = std::max(log_scale_, std::fabs(kernel_.log_at(s)));
}

// Tail contribution to I(xi) = int_0^inf ln K(t)/(t^2 - xi^2) dt beyond the
// cutoff, folded with u = 1/t into int_0^{1/T} g(u)/(1 - xi^2 u^2) du where
// g(u) = ln K(1/u) taken from the tail model.
QuadResult<std::complex<double>> CauchyFactorizer::tail_integral(std::complex<double> xi,
                                                                 double cutoff) const {
    QuadOptions opts;
    opts.rel_tol = quad_tol_;
    opts.abs_tol = quad_tol_ * log_scale_ / (cutoff * cutoff);
    const CauchyTailModel& tail = kernel_.tail;
    auto f = [&](double u) {
        const double u2 = u * u;
        double g = 0.0;
        if (tail.p != 0.0) g += std::log1p(tail.p * u);
        if (tail.num2 != 0.0) g += std::log1p(tail.num2 * u2);
        if (tail.den2 != 0.0) g -= std::log1p(tail.den2 * u2);
        return g / (1.0 - xi * xi * u2);
    };
    return adaptive_gk<std::complex<double>>(f, 0.0, 1.0 / cutoff, opts);
}

QuadResult<std::complex<double>> CauchyFactorizer::half_axis_integral(
    std::complex<double> xi) const {
    // I(xi) = int_0^inf ln K(t)/(t^2 - xi^2) dt with Theta = 2 xi I; the
    // principal-value variant (real xi) adds the half residue separately.
    const double x0 = std::fabs(xi.real());
    const double y = xi.imag();
    const auto& f = kernel_.log_at;
    double cutoff = std::max(kernel_.tail_cutoff, 3.0 * std::abs(xi));

    QuadOptions opts;
    opts.rel_tol = quad_tol_;
    opts.abs_tol = quad_tol_ * log_scale_ / std::max(kernel_.scales.front(), 1e-300);

    QuadResult<std::complex<double>> out;
    auto plain = [&](double t) { return std::complex<double>(f(t), 0.0) / (t * t - xi * xi); };

    if (y == 0.0 && x0 > 0.0) {
        // symmetric principal value around t = x0 with half-width a
        const double a = 0.5 * x0;
        auto phi = [&](double t) { return f(t) / (t + x0); };
        auto paired = [&](double s) {
            return std::complex<double>((phi(x0 + s) - phi(x0 - s)) / s, 0.0);
        };
        out += adaptive_gk_pts<std::complex<double>>(
            plain, make_breakpoints({0.5 * kernel_.scales.front()}, 0.0, x0 - a), opts);
        out += adaptive_gk<std::complex<double>>(paired, 0.0, a, opts);
        std::vector<double> upper = make_breakpoints({2.0 * x0, kernel_.scales.back()}, x0 + a, cutoff);
        out += adaptive_gk_pts<std::complex<double>>(plain, upper, opts);
    } else if (x0 > 0.0 && y < 0.25 * x0) {
        // near-axis: isolate the near-singular window [x0-a, x0+a] by
        // subtracting f(x0), integrating the subtracted constant in closed form
        const double a = 0.5 * x0;
        const double fx0 = f(x0);
        auto regular = [&](double t) {
            return std::complex<double>(f(t) - fx0, 0.0) / (t * t - xi * xi);
        };
        // int dt/(t^2 - xi^2) over the window; logs stay on fixed branches
        // because Im(t -/+ xi) keeps a constant sign for Im xi > 0
        const std::complex<double> window =
            (std::log(x0 + a - xi) - std::log(x0 - a - xi) - std::log(x0 + a + xi) +
             std::log(x0 - a + xi)) /
            (2.0 * xi);
        out += adaptive_gk_pts<std::complex<double>>(
            plain, make_breakpoints({0.5 * kernel_.scales.front()}, 0.0, x0 - a), opts);
        out += adaptive_gk<std::complex<double>>(regular, x0 - a, x0 + a, opts);
        out.value += fx0 * window;
        out += adaptive_gk_pts<std::complex<double>>(
            plain, make_breakpoints({2.0 * x0, kernel_.scales.back()}, x0 + a, cutoff), opts);
    } else {
        std::vector<double> pts = make_breakpoints(
            {0.5 * kernel_.scales.front(), kernel_.scales.back(), std::abs(xi), 3.0 * std::abs(xi)},
            0.0, cutoff);
        out += adaptive_gk_pts<std::complex<double>>(plain, pts, opts);
    }
    out += tail_integral(xi, cutoff);
    return out;
}

std::complex<double> CauchyFactorizer::theta(std::complex<double> xi) const {
    return theta_diag(xi).value;
}

QuadResult<std::complex<double>> CauchyFactorizer::theta_diag(std::complex<double> xi) const {
    if (xi.imag() < 0.0) throw std::domain_error("theta: xi must lie in the closed upper half-plane");
    QuadResult<std::complex<double>> r;
    if (xi == std::complex<double>(0.0, 0.0)) return r;
    r = half_axis_integral(xi);
    r.value *= 2.0 * xi;
    r.error *= 2.0 * std::abs(xi);
    if (xi.imag() == 0.0) r.value += kI * kPi * kernel_.log_at(std::fabs(xi.real()));
    return r;
}

std::complex<double> CauchyFactorizer::theta_shifted(std::complex<double> xi, double beta) const {
    if (beta <= 0.0) return theta(xi);
    if (xi.imag() <= -beta)
        throw std::domain_error("theta_shifted: xi must lie above the contour Im t = -beta");
    if (!kernel_.value_complex)
        throw std::logic_error("theta_shifted needs a complex kernel evaluator");
    const double cutoff = std::max(kernel_.tail_cutoff, 3.0 * std::abs(xi)) + 10.0 * beta;
    QuadOptions opts;
    opts.rel_tol = quad_tol_;
    opts.abs_tol = quad_tol_ * log_scale_ / std::max(kernel_.scales.front(), 1e-300);

    auto log_c = [&](double s) {
        const std::complex<double> v = kernel_.value_complex(std::complex<double>(s, -beta));
        return std::log(v);  // stays off the branch cut for beta inside the strip
    };
    auto paired = [&](double s) {
        const std::complex<double> t(s, -beta);
        const std::complex<double> g = log_c(s);
        return g / (t - xi) + std::conj(g) / (-std::conj(t) - xi);
    };
    std::vector<double> pts = make_breakpoints(
        {kernel_.scales.front(), kernel_.scales.back(), std::abs(xi), 3.0 * std::abs(xi)}, 0.0,
        cutoff);
    auto body = adaptive_gk_pts<std::complex<double>>(paired, pts, opts);

    const CauchyTailModel& tail = kernel_.tail;
    auto tail_f = [&](double u) {
        const std::complex<double> t(1.0 / u, -beta);
        const std::complex<double> g = tail.log_at(t);
        return (g / (t - xi) - std::conj(g) / (std::conj(t) + xi)) / (u * u);
    };
    auto tl = adaptive_gk<std::complex<double>>(tail_f, 0.0, 1.0 / cutoff, opts);
    return body.value + tl.value;
}

std::complex<double> CauchyFactorizer::plus(std::complex<double> xi) const {
    if (xi == std::complex<double>(0.0, 0.0)) return 1.0;
    if (xi.imag() >= 0.0) return std::exp(theta(xi) / (2.0 * kPi * kI));
    if (!kernel_.value_complex)
        throw std::logic_error("plus below the axis needs a complex kernel evaluator");
    // continuation through the strip: K+ = K / K-, K-(xi) = K+(-xi)
    return kernel_.value_complex(xi) / plus(-xi);
}

namespace {

EvenLogKernel kernel_from_shape(const KernelShape& shape, double cutoff) {
    EvenLogKernel k;
    k.log_at = [shape](double t) { return shape.log_value(t); };
    k.value_complex = [shape](std::complex<double> t) { return shape.value(t); };
    k.tail = {shape.tail_p, 0.0, shape.big_a / shape.w};
    k.tail_cutoff = cutoff;
    k.scales = {shape.scale_min(), shape.scale_max()};
    return k;
}

}  // namespace

Factorization::Factorization(const StripConfig& cfg, FactorizationSettings settings)
    : cfg_(cfg),
      settings_(settings),
      shape_(KernelShape::physical(cfg)),
      factorizer_(kernel_from_shape(shape_, settings.resolved_cutoff(shape_)), settings.quad_tol) {
    const KernelParams kp = kernel_params(cfg);
    eta_ = kp.eta;
    lambda_ = kp.lambda;
    alpha_ = alpha_integral(cfg, settings).alpha;
    gamma_plus_ = gamma_plus_root(cfg).gamma_plus;
    gamma_minus_ = bimstrip::gamma_minus(cfg);
    strip_half_width_ = std::min({gamma_plus_, lambda_, gamma_minus_});
    if (settings_.beta < 0.0 || settings_.beta >= strip_half_width_)
        throw std::invalid_argument("factorization beta must lie in [0, strip half-width)");
}

std::complex<double> Factorization::theta_plus(std::complex<double> xi) const {
    if (settings_.beta > 0.0) return factorizer_.theta_shifted(xi, settings_.beta);
    return factorizer_.theta(xi);
}

QuadResult<std::complex<double>> Factorization::theta_plus_diag(std::complex<double> xi) const {
    return factorizer_.theta_diag(xi);
}

std::complex<double> Factorization::plus(std::complex<double> xi) const {
    if (xi == std::complex<double>(0.0, 0.0)) return 1.0;
    if (xi.imag() >= 0.0) return std::exp(theta_plus(xi) / (2.0 * kPi * kI));
    if (xi.imag() > -strip_half_width_) return shape_.value(xi) / plus(-xi);
    throw std::domain_error("plus: xi below the strip of analyticity");
}

AsymptoticsReport Factorization::verify_asymptotics() const {
    AsymptoticsReport rep;
    const double h = cfg_.h_total();

    // zero point: m(y) = (K+(iy) - 1)/(iy) has an O(y) transient; Richardson
    // at {y0, y0/2} removes it
    const double y0 = 1e-3 * shape_.scale_min();
    auto measure = [&](double y) {
        return (factorizer_.plus(std::complex<double>(0.0, y)) - 1.0) / std::complex<double>(0.0, y);
    };
    const std::complex<double> m1 = measure(y0);
    const std::complex<double> m2 = measure(0.5 * y0);
    rep.zero_coeff_measured = 2.0 * m2 - m1;
    rep.zero_coeff_target = alpha_ / (kPi * kI);
    rep.zero_rel_dev =
        std::abs(rep.zero_coeff_measured - rep.zero_coeff_target) / std::abs(rep.zero_coeff_target);

    // infinity: K+(iY) - 1 ~ coeff * ln(Y)/(iY) + c/Y; differencing at Y, Y/2
    // eliminates the constant and leaves the pure log coefficient.
    const double yy = 1e3 / h;
    auto g = [&](double y) {
        return (factorizer_.plus(std::complex<double>(0.0, y)) - 1.0) * std::complex<double>(0.0, y);
    };
    const std::complex<double> g1 = g(yy);
    const std::complex<double> g2 = g(0.5 * yy);
    rep.probe_height = yy;
    rep.inf_coeff_measured = (g1 - g2) / std::log(2.0);
    // the measured coefficient is +i P/pi with P = (mu1 + mu2)/(mu1 mu2 kappa):
    // Theta(iY) = 2iY int_0^inf ln K/(t^2 + Y^2) dt is positive imaginary, so
    // K+(iY) > 1 on the imaginary axis
    const double p = (cfg_.mu1 + cfg_.mu2) / (cfg_.mu1 * cfg_.mu2 * cfg_.kappa);
    rep.inf_coeff_target = kI * p / kPi;
    rep.inf_rel_dev =
        std::abs(rep.inf_coeff_measured - rep.inf_coeff_target) / std::abs(rep.inf_coeff_target);
    rep.inf_magnitude_ratio = std::abs(rep.inf_coeff_measured) / std::abs(rep.inf_coeff_target);

    // Plemelj product audit on a fixed real-axis grid
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double x = std::exp(std::log(0.1) + k * (std::log(20.0) - std::log(0.1)) / 15.0) / h;
        const std::complex<double> fp = factorizer_.plus(std::complex<double>(x, 0.0));
        const double prod = (fp * std::conj(fp)).real();
        worst = std::max(worst, std::fabs(prod - shape_.value(x)) / shape_.value(x));
    }
    rep.identity_error = worst;
    return rep;
}

}  // namespace bimstrip
