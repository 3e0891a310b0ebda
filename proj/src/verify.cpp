#include "bimstrip/verify.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "bimstrip/factorize.hpp"
#include "bimstrip/field.hpp"
#include "bimstrip/numerics.hpp"

namespace bimstrip {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

CheckResult check(const std::string& name, double deviation, double tolerance,
                  const std::string& note = "") {
    CheckResult c;
    c.name = name;
    c.deviation = deviation;
    c.tolerance = tolerance;
    c.pass = std::isfinite(deviation) && deviation <= tolerance;
    c.note = note;
    return c;
}

}  // namespace

StripConfig random_config(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> contrast(-0.9, 0.9);
    std::uniform_real_distribution<double> logk(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    DimensionlessParams dp;
    dp.mu_star = contrast(rng);
    dp.h_star = contrast(rng);
    dp.kappa_star = std::pow(10.0, logk(rng));
    dp.h_total = scale(rng);
    dp.lambda_star = lambda_star_closed_form(dp.mu_star, dp.h_star, dp.kappa_star);
    return dimensionalize(dp, dp.h_total, 2.0 * scale(rng));
}

VerifyReport run_verify(const StripConfig& cfg, const FactorizationSettings& settings,
                        const VerifyOptions& options) {
    VerifyReport rep;
    cfg.validate();
    std::mt19937_64 rng(options.seed);

    AsymptoticConstants ac = compute_constants(cfg, settings);
    if (options.lambda_perturbation != 0.0) ac.lambda *= 1.0 + options.lambda_perturbation;

    // exact structural identities
    {
        const double lhs = cfg.mu1 * cfg.h1 * ac.c[0] + cfg.mu2 * cfg.h2 * ac.c[1];
        rep.checks.push_back(check("c_weighted_sum_zero", std::fabs(lhs), 0.0));
        const double open = ac.alpha / kPi + 1.0 / ac.lambda;
        const double dev = std::max(std::fabs(ac.d[0] + ac.c[0] * open) / std::fabs(ac.d[0]),
                                    std::fabs(ac.d[1] + ac.c[1] * open) / std::fabs(ac.d[1]));
        rep.checks.push_back(check("d_identity", dev, 1e-12));
        rep.checks.push_back(
            check("a0_equals_lambda", std::fabs(ac.a0 - ac.lambda) / ac.lambda, 0.0));
        const double gm = kPi / std::max(cfg.h1, cfg.h2);
        rep.checks.push_back(
            check("gamma_minus_formula", std::fabs(ac.gamma_minus - gm) / gm, 0.0));
    }

    // gamma_plus solves the dispersion relation, with no earlier sign change
    {
        const auto gp = gamma_plus_root(cfg);
        auto dispersion = [&](double g) {
            return std::cos(g * cfg.h1) / (std::sin(g * cfg.h1) * cfg.mu1) +
                   std::cos(g * cfg.h2) / (std::sin(g * cfg.h2) * cfg.mu2) - cfg.kappa * g;
        };
        const double scale = ac.eta / gp.gamma_plus;  // magnitude of the leading term
        rep.checks.push_back(
            check("gamma_plus_residual", std::fabs(dispersion(gp.gamma_plus)) / scale, 1e-9,
                  gp.regime));
        bool monotone_sign = true;
        for (int i = 1; i <= 16; ++i)
            if (dispersion(gp.gamma_plus * i / 17.0) <= 0.0) monotone_sign = false;
        rep.checks.push_back(
            check("gamma_plus_first_root", monotone_sign ? 0.0 : 1.0, 0.0));
    }

    // det(M) against its closed form
    {
        const auto jm = junction_matrix(cfg, ac);
        rep.checks.push_back(check("det_m_identity",
                                   std::fabs(jm.det - jm.det_closed_form) /
                                       std::fabs(jm.det_closed_form),
                                   1e-10, jm.det < 0.0 ? "det<0" : "det>=0 (!)"));
    }

    // alpha through the two independent routes (physical vs dimensionless)
    {
        const DimensionlessParams dp = nondimensionalize(cfg);
        const double ai_dimless = alpha_imperfect(dp, settings);
        const double ai_physical = -(ac.alpha / kPi + 1.0 / ac.lambda) / cfg.h_total();
        rep.checks.push_back(check("alpha_i_two_routes",
                                   std::fabs(ai_dimless - ai_physical) / std::fabs(ai_dimless),
                                   1e-10));
    }

    // factorization: Plemelj product on random real points, this config plus a
    // few random ones
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> logxi(std::log(0.01), std::log(50.0));
        for (int c = 0; c <= options.random_configs; ++c) {
            const StripConfig probe_cfg = c == 0 ? cfg : random_config(rng());
            const Factorization fact(probe_cfg, settings);
            const int n = c == 0 ? options.random_points : options.random_points / 4;
            for (int i = 0; i < n; ++i) {
                const double x = std::exp(logxi(rng)) / probe_cfg.h_total();
                const cplx fp = fact.plus(cplx(x, 0.0));
                const double prod = (fp * std::conj(fp)).real();
                worst = std::max(worst, std::fabs(prod - fact.xi_star(x)) / fact.xi_star(x));
            }
        }
        rep.checks.push_back(check("plemelj_product", worst, 1e-6));
    }

    const Factorization fact(cfg, settings);

    // asymptotic coefficients of the plus factor
    {
        const auto ar = fact.verify_asymptotics();
        rep.checks.push_back(check("plus_zero_coefficient", ar.zero_rel_dev, 1e-4));
        rep.checks.push_back(check("plus_infinity_coefficient",
                                   std::fabs(ar.inf_magnitude_ratio - 1.0), 0.05));
    }

    // beta-independence of the boundary values
    {
        const double beta = 0.5 * fact.strip_half_width();
        double worst = 0.0;
        for (int i = 1; i <= 8; ++i) {
            const double x = 0.3 * i / cfg.h_total();
            const cplx pv = fact.plus(cplx(x, 0.0));
            const cplx shifted = std::exp(fact.factorizer().theta_shifted(cplx(x, 0.0), beta) /
                                          (2.0 * kPi * cplx(0.0, 1.0)));
            worst = std::max(worst, std::abs(pv - shifted) / std::abs(pv));
        }
        rep.checks.push_back(check("beta_independence", worst, 5.0 * settings.quad_tol));
    }

    // synthetic one-sided inversion oracle: transform 1/(t + i), limit -i
    {
        auto tbr = theorem_b_oracle([](double t) { return 1.0 / cplx(t, 1.0); }, 1.0);
        rep.checks.push_back(check("theorem_b_synthetic", std::abs(tbr.limit - cplx(0.0, -1.0)),
                                   1e-3));
        rep.checks.push_back(check("theorem_b_synthetic_negative", tbr.negative_side_abs, 1e-4));
    }

    if (options.with_field) {
        // far-field linear growth against C1, D1 and decay against gamma_plus
        const double h = cfg.h_total();
        std::vector<std::array<double, 2>> minus_pts, plus_pts;
        for (int i = 0; i < 9; ++i) {
            minus_pts.push_back({-30.0 * h + 10.0 * h * i / 8.0, 0.5 * cfg.h1});
            plus_pts.push_back({10.0 * h + 10.0 * h * i / 8.0, 0.5 * cfg.h1});
        }
        const auto far = invert_field(minus_pts, cfg, fact);
        std::vector<double> xs, ys;
        for (const auto& p : far.points) {
            xs.push_back(p.x);
            ys.push_back(p.value);
        }
        const auto line = least_squares(xs, ys, {[](double) { return 1.0; }, [](double x) { return x; }});
        rep.checks.push_back(
            check("far_field_slope_c1", std::fabs(line[1] - ac.c[0]) / std::fabs(ac.c[0]), 0.01));
        rep.checks.push_back(
            check("far_field_offset_d1", std::fabs(line[0] - ac.d[0]) / std::fabs(ac.d[0]), 0.02));

        const auto decay = invert_field(plus_pts, cfg, fact);
        std::vector<double> lx, ly;
        for (const auto& p : decay.points)
            if (p.value != 0.0 && std::isfinite(p.value)) {
                lx.push_back(p.x);
                ly.push_back(std::log(std::fabs(p.value)));
            }
        const auto dfit = least_squares(lx, ly, {[](double) { return 1.0; }, [](double x) { return x; }});
        rep.checks.push_back(check("decay_rate_gamma_plus",
                                   std::fabs(-dfit[1] - ac.gamma_plus) / ac.gamma_plus, 0.05));

        const auto tip = near_tip_check(cfg, fact);
        rep.checks.push_back(check("tip_flux_limit", tip.flux_rel_dev, 0.02));
        rep.checks.push_back(check("tip_jump_limit", tip.jump_rel_dev, 0.02));
    }

    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace bimstrip
