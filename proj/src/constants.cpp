#include "bimstrip/constants.hpp"

#include <cmath>

#include "bimstrip/numerics.hpp"
#include "bimstrip/quadrature.hpp"
#include "bimstrip/special.hpp"

namespace bimstrip {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Closed-form tail of int_T^inf [ln(1+P/t) - ln(1+L2/t^2)] / t^2 dt via u = 1/t:
// int_0^v ln(1+Pu) du - int_0^v ln(1+L2 u^2) du, v = 1/T.
double alpha_tail_closed_form(double p, double l2, double cutoff) {
    const double v = 1.0 / cutoff;
    const double pv = p * v;
    const double tp = p > 0.0 ? ((1.0 + pv) * std::log1p(pv) - pv) / p : 0.0;
    const double l = std::sqrt(l2);
    const double tl = v * std::log1p(l2 * v * v) - 2.0 * v + (2.0 / l) * std::atan(l * v);
    return tp - tl;
}

AlphaResult alpha_for_shape(const KernelShape& shape, const FactorizationSettings& settings) {
    const double cutoff = settings.resolved_cutoff(shape);
    QuadOptions opts;
    opts.rel_tol = std::min(settings.quad_tol, 1e-9);
    // integrand ln K(t)/t^2 >= 0 (z coth z >= 1 on the real axis), so a purely
    // relative target cannot stall on cancellation
    auto pts = make_breakpoints(
        {0.5 * shape.scale_min(), 1.0 / shape.s1, 1.0 / shape.s2, shape.lambda_hat,
         10.0 * shape.scale_max()},
        0.0, cutoff);
    auto res = adaptive_gk_pts<double>([&shape](double t) { return shape.log_over_t2(t); }, pts, opts);
    AlphaResult out;
    out.alpha = res.value;
    if (settings.tail_correction)
        out.alpha += alpha_tail_closed_form(shape.tail_p, shape.big_a / shape.w, cutoff);
    out.error = res.error;
    out.evals = res.evals;
    return out;
}

double det4(const std::array<std::array<double, 4>, 4>& m) {
    auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h,
                   double i) { return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g); };
    double det = 0.0;
    for (int col = 0; col < 4; ++col) {
        std::array<double, 9> sub{};
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != col) sub[idx++] = m[r][c];
        const double minor =
            det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
        det += ((col % 2) ? -1.0 : 1.0) * m[0][col] * minor;
    }
    return det;
}

}  // namespace

double FactorizationSettings::resolved_cutoff(const KernelShape& shape) const {
    const double h_sum = shape.s1 + shape.s2;  // reference thickness in the shape's units
    const double lambda_star = shape.lambda_hat * h_sum;
    const double floor_star = 10.0 * std::max(1.0, lambda_star);
    double star = tail_cutoff > 0.0 ? tail_cutoff : 0.0;
    if (star <= 0.0) {
        const double contrast = 20.0 * h_sum / std::min(shape.s1, shape.s2);
        star = std::max(200.0 * std::max(1.0, lambda_star), contrast);
    }
    return std::max(star, floor_star) / h_sum;
}

AlphaResult alpha_integral(const StripConfig& cfg, const FactorizationSettings& settings) {
    const KernelShape shape = KernelShape::physical(cfg);
    AlphaResult res = alpha_for_shape(shape, settings);
    res.alpha_star = res.alpha / cfg.h_total();
    return res;
}

AlphaResult alpha_star_integral(const DimensionlessParams& dp,
                                const FactorizationSettings& settings) {
    const KernelShape shape = KernelShape::dimensionless(dp);
    AlphaResult res = alpha_for_shape(shape, settings);
    res.alpha_star = res.alpha;
    res.alpha = res.alpha_star * dp.h_total;
    return res;
}

GammaPlusResult gamma_plus_root(const StripConfig& cfg) {
    cfg.validate(/*allow_zero_kappa=*/true);
    const double gm = gamma_minus(cfg);
    auto dispersion = [&cfg](double g) {
        return std::cos(g * cfg.h1) / (std::sin(g * cfg.h1) * cfg.mu1) +
               std::cos(g * cfg.h2) / (std::sin(g * cfg.h2) * cfg.mu2) - cfg.kappa * g;
    };
    // dispersion is strictly decreasing on (0, gamma_minus): +inf at 0+, -inf at
    // gamma_minus-.  Walk the lower end down if a very large kappa pushed the
    // root below the initial probe.
    double lo = gm * 1e-6;
    int guard = 0;
    while (dispersion(lo) <= 0.0 && ++guard < 100) lo *= 1e-3;
    double hi = gm * (1.0 - 1e-9);
    if (dispersion(hi) >= 0.0) hi = gm * (1.0 - 1e-12);
    RootResult r = brent(dispersion, lo, hi, 1e-15);
    if (!r.bracketed) {
        // should not happen for a valid config; report the sampled sign pattern
        std::string pattern;
        for (int i = 1; i <= 8; ++i)
            pattern += dispersion(gm * i / 9.0) > 0.0 ? '+' : '-';
        throw std::runtime_error("gamma_plus bracketing failed; sign pattern " + pattern);
    }
    GammaPlusResult out;
    out.gamma_plus = r.root;
    out.residual = r.residual;
    const double half_wave = 0.5 * kPi / std::max(cfg.h1, cfg.h2);
    out.regime = r.root < 0.9 * half_wave ? "kappa-dominated" : "cot-dominated";
    return out;
}

double gamma_minus(const StripConfig& cfg) { return kPi / std::max(cfg.h1, cfg.h2); }

double alpha_perfect(const DimensionlessParams& dp, double rel_tol) {
    dp.validate(/*allow_zero_kappa=*/true);
    const double hs = dp.h_star, ms = dp.mu_star;
    const double first = ((1.0 + hs) * 0.5 * std::log((1.0 + hs) * 0.5) +
                          (1.0 - hs) * 0.5 * std::log((1.0 - hs) * 0.5)) / kPi;
    if (ms == 0.0) return first;

    // numerator h* - tanh(t h*) coth(t) and denominator t (sinh t + mu* sinh(t h*))
    // expanded to t^4 around the removable point
    const double n2 = -hs * (1.0 - hs * hs) / 3.0;
    const double n4 = hs / 45.0 + hs * hs * hs / 9.0 - 2.0 * std::pow(hs, 5) / 15.0;
    const double n6 = -(2.0 * hs / 945.0 + std::pow(hs, 3) / 135.0 + 2.0 * std::pow(hs, 5) / 45.0 -
                        17.0 * std::pow(hs, 7) / 315.0);
    const double d0 = 1.0 + ms * hs;
    const double d2 = (1.0 + ms * hs * hs * hs) / 6.0;
    const double d4 = (1.0 + ms * std::pow(hs, 5)) / 120.0;
    const double a0 = n2 / d0;
    const double a2 = n4 / d0 - n2 * d2 / (d0 * d0);
    const double a4 = n6 / d0 - (n2 * d4 + n4 * d2) / (d0 * d0) + n2 * d2 * d2 / (d0 * d0 * d0);

    auto integrand = [&](double t) {
        if (t < 0.02) {
            const double u = t * t;
            return a0 + u * (a2 + u * a4);
        }
        const double num = hs - std::tanh(t * hs) * (1.0 + zcothm1(t)) / t;
        const double den = (std::sinh(t) + ms * std::sinh(t * hs)) * t;
        return num / den;
    };
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    opts.abs_tol = 1e-15;
    auto pts = make_breakpoints({0.02, 1.0, 5.0, 20.0}, 0.0, 60.0);
    const double integral = adaptive_gk_pts<double>(integrand, pts, opts).value;
    return first - ms / kPi * integral;
}

double alpha_imperfect(const DimensionlessParams& dp, const FactorizationSettings& settings) {
    dp.validate();
    const double lambda_star = lambda_star_closed_form(dp.mu_star, dp.h_star, dp.kappa_star);
    const double a_star = alpha_star_integral(dp, settings).alpha_star;
    return -(a_star / kPi + 1.0 / lambda_star);
}

AsymptoticConstants compute_constants(const StripConfig& cfg,
                                      const FactorizationSettings& settings) {
    cfg.validate();
    AsymptoticConstants ac;
    const KernelParams kp = kernel_params(cfg);
    ac.eta = kp.eta;
    ac.lambda = kp.lambda;
    const AlphaResult ar = alpha_integral(cfg, settings);
    ac.alpha = ar.alpha;
    ac.alpha_star = ar.alpha_star;
    ac.c = {1.0 / (cfg.mu1 * cfg.h1), -1.0 / (cfg.mu2 * cfg.h2)};
    const double opening = ac.alpha / kPi + 1.0 / ac.lambda;
    ac.d = {-ac.c[0] * opening, -ac.c[1] * opening};
    ac.a0 = ac.lambda;
    ac.gamma_plus = gamma_plus_root(cfg).gamma_plus;
    ac.gamma_minus = gamma_minus(cfg);
    const DimensionlessParams dp = nondimensionalize(cfg);
    ac.alpha_imperfect = alpha_imperfect(dp, settings);
    ac.alpha_perfect = alpha_perfect(dp);
    return ac;
}

JunctionCoefficients junction_coefficients(const StripConfig& cfg, const AsymptoticConstants& ac) {
    JunctionCoefficients jc;
    jc.opening_to_jump = ac.alpha / kPi + 1.0 / ac.lambda;
    const double stiffness = cfg.mu1 * cfg.h1 + cfg.mu2 * cfg.h2;
    jc.weight2 = cfg.mu2 * cfg.h2 / stiffness;
    jc.weight3 = cfg.mu1 * cfg.h1 / stiffness;
    jc.tip_amplitude_factor = 1.0 / (cfg.kappa * ac.lambda);
    jc.alpha_i_normalized = -jc.opening_to_jump / cfg.h_total();
    return jc;
}

JunctionMatrix junction_matrix(const StripConfig& cfg, const AsymptoticConstants& ac) {
    JunctionMatrix jm;
    const double a = cfg.mu1 * cfg.h1, b = cfg.mu2 * cfg.h2;
    const double c1 = ac.c[0], c2 = ac.c[1], d1 = ac.d[0], d2 = ac.d[1];
    jm.m = {{{a, b, 0.0, 0.0},
             {0.0, 0.0, a, b},
             {a * d1, b * d2, -a * c1, -b * c2},
             {a * c1, b * c2, 0.0, 0.0}}};
    jm.det = det4(jm.m);
    jm.det_closed_form = -a * a * b * b * (c1 - c2) * (c1 - c2);
    return jm;
}

JunctionFirstOrder junction_apply(double delta_v_prime, double v4_first, const StripConfig& cfg,
                                  const AsymptoticConstants& ac) {
    const JunctionCoefficients jc = junction_coefficients(cfg, ac);
    JunctionFirstOrder out;
    out.v2_first = v4_first - jc.weight2 * jc.opening_to_jump * delta_v_prime;
    out.v3_first = v4_first + jc.weight3 * jc.opening_to_jump * delta_v_prime;
    out.tip_amplitude = delta_v_prime * jc.tip_amplitude_factor;
    return out;
}

ZeroOrderResiduals junction_zero_order_residuals(double v2, double v3, double v4, double dv2,
                                                 double dv3, double dv4, const StripConfig& cfg) {
    ZeroOrderResiduals r;
    r.continuity2 = v2 - v4;
    r.continuity3 = v3 - v4;
    const double a = cfg.mu1 * cfg.h1, b = cfg.mu2 * cfg.h2;
    r.flux_balance = (a + b) * dv4 - a * dv2 - b * dv3;
    return r;
}

SingularLimits singular_limits(const StripConfig& cfg) {
    cfg.validate();
    const KernelParams kp = kernel_params(cfg);
    SingularLimits sl;
    sl.jump_estimate = std::sqrt(kp.eta * cfg.kappa);
    sl.flux_estimate = -std::sqrt(kp.eta / cfg.kappa);
    sl.ratio = cfg.kappa * kp.lambda / sl.jump_estimate;
    return sl;
}

}  // namespace bimstrip
