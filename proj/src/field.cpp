#include "bimstrip/field.hpp"

#include <algorithm>
#include <cmath>

#include "bimstrip/kernel.hpp"
#include "bimstrip/quadrature.hpp"
#include "bimstrip/special.hpp"

namespace bimstrip {

namespace {

constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);
using cplx = std::complex<double>;

// cosh(a)/sinh(b), overflow-free; requires |Re a| <= |Re b| (true for all
// in-strip Y arguments used here).
cplx ratio_cosh_sinh(cplx a, cplx b) {
    if (b.real() < 0.0) return -ratio_cosh_sinh(a, -b);
    const cplx num = std::exp(a - b) + std::exp(-a - b);
    const cplx den = 1.0 - std::exp(-2.0 * b);
    return num / den;
}

cplx ratio_sinh_sinh(cplx a, cplx b) {
    if (b.real() < 0.0) return -ratio_sinh_sinh(a, -b);
    const cplx num = std::exp(a - b) - std::exp(-a - b);
    const cplx den = 1.0 - std::exp(-2.0 * b);
    return num / den;
}

cplx phi_plus_with(double lambda, cplx xi, cplx plus_val) {
    return -lambda / ((lambda - kI * xi) * plus_val);
}

cplx ybar_with(const StripConfig& cfg, double lambda, cplx xi, double y, int material,
               cplx plus_val) {
    const cplx ph = phi_plus_with(lambda, xi, plus_val);
    if (material == 1) return -ph / (cfg.mu1 * xi) * ratio_cosh_sinh(xi * (y - cfg.h1), xi * cfg.h1);
    return ph / (cfg.mu2 * xi) * ratio_cosh_sinh(xi * (y + cfg.h2), xi * cfg.h2);
}

cplx ybar_dy_with(const StripConfig& cfg, double lambda, cplx xi, double y, int material,
                  cplx plus_val) {
    const cplx ph = phi_plus_with(lambda, xi, plus_val);
    if (material == 1) return -ph / cfg.mu1 * ratio_sinh_sinh(xi * (y - cfg.h1), xi * cfg.h1);
    return ph / cfg.mu2 * ratio_sinh_sinh(xi * (y + cfg.h2), xi * cfg.h2);
}

// Panel layout for int_0^S e^{-i s X} F(s - i b0) ds: feature points near the
// contour offset and the kernel scales, a geometric ladder through the decade
// span, and a gap cap of half an oscillation period.
std::vector<double> build_panels(double s_max, double x, double beta0,
                                 const std::vector<double>& features) {
    std::vector<double> pts{0.0, s_max};
    auto add = [&](double v) {
        if (v > 0.0 && v < s_max) pts.push_back(v);
    };
    if (beta0 > 0.0) {
        add(0.3 * beta0);
        add(beta0);
        add(3.0 * beta0);
    }
    double lo = s_max;
    for (double f : features) {
        add(f);
        if (f > 0.0) lo = std::min(lo, f);
    }
    for (double s = lo; s < s_max; s *= 1.7) add(s);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const double ax = std::fabs(x);
    if (ax > 0.0) {
        const double dmax = 0.5 * kPi / ax;
        std::vector<double> out;
        out.push_back(pts.front());
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const double gap = pts[i] - pts[i - 1];
            const int splits = gap > dmax ? static_cast<int>(std::ceil(gap / dmax)) : 1;
            for (int k = 1; k <= splits; ++k) out.push_back(pts[i - 1] + gap * k / splits);
        }
        return out;
    }
    return pts;
}

struct ContourResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// (1/2pi) int over Im xi = -beta0 of e^{-i xi X} F(xi) dxi for a transform
// obeying F(-conj xi) = conj F(xi), folded to (1/pi) Re int_{s>=0}.
template <typename F>
ContourResult invert_contour(F&& fn, double x, double beta0, double s_max, double tol,
                             const std::vector<double>& features) {
    auto integrand = [&](double s) {
        const cplx xi(s, -beta0);
        return (std::exp(-kI * xi * x) * fn(xi)).real();
    };
    QuadOptions opts;
    opts.rel_tol = tol;
    opts.max_panels = 600;
    opts.throw_on_failure = false;
    const auto pts = build_panels(s_max, x, beta0, features);
    ContourResult out;
    double sum = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        auto r = adaptive_gk<double>(integrand, pts[i], pts[i + 1], opts);
        sum += r.value;
        err += r.error;
        out.converged = out.converged && r.converged;
    }
    // truncation bound from the endpoint magnitude and the 1/s^2-type tail
    const double tail_mag = std::abs(fn(cplx(s_max, -beta0)));
    out.value = sum / kPi;
    out.error = err / kPi + tail_mag * s_max / kPi;
    return out;
}

// Least-squares solve of y = c0 + c1 * xh*ln(1/xh) + c2 * xh over three probes
// (xh normalized); returns c0, the x -> 0 limit.
template <typename T>
T extrapolate_to_zero(const std::array<double, 3>& xh, const std::array<T, 3>& y) {
    double a[3][3];
    for (int i = 0; i < 3; ++i) {
        a[i][0] = 1.0;
        a[i][1] = xh[i] * std::log(1.0 / xh[i]);
        a[i][2] = xh[i];
    }
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    // Cramer for the first unknown only
    const T d0 = y[0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                 T(a[0][1]) * (y[1] * a[2][2] - a[1][2] * y[2]) +
                 T(a[0][2]) * (y[1] * a[2][1] - a[1][1] * y[2]);
    return d0 / det;
}

double decay_distance(const StripConfig& cfg, double y, int material) {
    if (material == 1) return std::min(y, 2.0 * cfg.h1 - y);
    return std::min(-y, y + 2.0 * cfg.h2);
}

}  // namespace

Transforms::Transforms(const StripConfig& cfg, const Factorization& fact)
    : cfg_(cfg), fact_(&fact), lambda_(fact.lambda()) {}

void Transforms::check_strip(cplx xi, bool mirror) const {
    const double lo = mirror ? -fact_->gamma_minus() : -fact_->gamma_plus();
    const double hi = mirror ? fact_->gamma_plus() : fact_->gamma_minus();
    if (xi == cplx(0.0, 0.0)) throw std::domain_error("transform has a pole at xi = 0");
    if (!(xi.imag() > lo && xi.imag() < hi))
        throw std::domain_error("xi outside the strip of analyticity of the transform");
}

cplx Transforms::phi_plus(cplx xi) const {
    if (!(xi.imag() > -fact_->gamma_plus()))
        throw std::domain_error("phi_plus: xi below -gamma_plus");
    return phi_plus_with(lambda_, xi, fact_->plus(xi));
}

cplx Transforms::phi_minus(cplx xi) const {
    check_strip(xi, /*mirror=*/true);
    return cfg_.kappa * lambda_ * (lambda_ + kI * xi) * fact_->plus(-xi) / (xi * xi);
}

cplx Transforms::ybar(cplx xi, double y, int material) const {
    check_strip(xi, /*mirror=*/false);
    return ybar_with(cfg_, lambda_, xi, y, material, fact_->plus(xi));
}

cplx Transforms::ybar_dy(cplx xi, double y, int material) const {
    check_strip(xi, /*mirror=*/false);
    return ybar_dy_with(cfg_, lambda_, xi, y, material, fact_->plus(xi));
}

FactorLine::FactorLine(const Factorization& fact, double beta0, double s_max, int nodes)
    : beta0_(beta0), s_max_(s_max) {
    if (beta0 < 0.0 || beta0 >= fact.gamma_plus())
        throw std::invalid_argument("FactorLine: beta0 must lie in [0, gamma_plus)");
    scale_ = 0.5 * fact.shape().scale_min();
    const double xmax = std::asinh(s_max / scale_);
    int n = nodes > 0 ? nodes : std::max(700, static_cast<int>(140.0 * xmax));
    std::vector<double> xs(n), re(n), im(n);
    for (int i = 0; i < n; ++i) {
        const double xx = xmax * i / (n - 1);
        const double s = scale_ * std::sinh(xx);
        cplx h;
        if (s == 0.0 && beta0 == 0.0)
            h = 0.0;
        else
            h = std::log(fact.plus(cplx(s, -beta0)));
        xs[i] = xx;
        re[i] = h.real();
        im[i] = h.imag();
    }
    re_ = CubicSpline(xs, re);
    im_ = CubicSpline(xs, im);
    // audit interpolation quality at a few off-node points
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const double xx = xmax * (k - 0.5) / 8.0;
        const double s = scale_ * std::sinh(xx);
        const cplx direct = std::log(fact.plus(cplx(s, -beta0)));
        const cplx interp(re_(xx), im_(xx));
        worst = std::max(worst, std::abs(direct - interp));
    }
    interp_error_ = worst;
}

cplx FactorLine::log_plus(double s) const {
    const double xx = std::asinh(std::min(s, s_max_) / scale_);
    return {re_(xx), im_(xx)};
}

cplx FactorLine::plus(double s) const { return std::exp(log_plus(s)); }

namespace {

struct Group {
    double beta0;
    double s_max;
    std::vector<std::size_t> idx;
};

FieldSample invert_impl(const std::vector<std::array<double, 2>>& points, const StripConfig& cfg,
                        const Factorization& fact, const FieldSettings& settings, bool derivative) {
    cfg.validate();
    const double r_min = settings.r_min_factor * std::min(cfg.h1, cfg.h2);
    const double h = cfg.h_total();
    for (const auto& p : points) {
        if (std::hypot(p[0], p[1]) < r_min)
            throw std::invalid_argument("field point inside the tip exclusion disc");
        if (p[1] > cfg.h1 || p[1] < -cfg.h2)
            throw std::invalid_argument("field point outside the strip");
    }
    const double gp = fact.gamma_plus();
    const KernelShape& shape = fact.shape();

    // group points by contour: far left points need beta0 ~ 1/|X| to keep the
    // e^{beta0 |X|} prefactor O(1); far right points want beta0 near gamma_plus
    // so the contour carries most of the e^{-gamma_plus X} decay
    std::vector<Group> groups;
    auto group_of = [&](double x) -> std::size_t {
        double b;
        if (settings.beta0 > 0.0)
            b = settings.beta0;
        else if (x < -2.0 * h)
            b = std::min(0.5 * gp, 1.0 / (1.05 * std::fabs(x)));
        else if (x > 2.0 * h)
            b = 0.85 * gp;
        else
            b = std::min(0.5 * gp, 0.5 / h);
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (std::fabs(groups[g].beta0 - b) < 1e-12 * gp) return g;
        groups.push_back({b, 0.0, {}});
        return groups.size() - 1;
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& g = groups[group_of(points[i][0])];
        g.idx.push_back(i);
        const double y = points[i][1];
        const int mat = y < 0.0 ? 2 : 1;
        const double d = decay_distance(cfg, y, mat);
        double s_need;
        if (d > 1e-12 * h)
            s_need = std::max((45.0 + std::log1p(std::fabs(points[i][0]) / h)) / d, 6.0 / h);
        else
            s_need = std::max(4e3 / h, 40.0 * shape.scale_max());
        g.s_max = std::max(g.s_max, s_need);
    }
    if (settings.cutoff > 0.0)
        for (auto& g : groups) g.s_max = settings.cutoff;

    FieldSample out;
    out.points.resize(points.size());
    const double lambda = fact.lambda();
    const std::vector<double> features{1.0 / cfg.h1, 1.0 / cfg.h2, lambda, gp};

    for (const auto& g : groups) {
        FactorLine line(fact, g.beta0, 1.01 * g.s_max);
        for (std::size_t i : g.idx) {
            const double x = points[i][0], y = points[i][1];
            const int mat = y < 0.0 ? 2 : 1;
            auto fn = [&](cplx xi) {
                const cplx pv = line.plus(xi.real());
                return derivative ? ybar_dy_with(cfg, lambda, xi, y, mat, pv)
                                  : ybar_with(cfg, lambda, xi, y, mat, pv);
            };
            auto r = invert_contour(fn, x, g.beta0, g.s_max, settings.tol, features);
            FieldPoint fp;
            fp.x = x;
            fp.y = y;
            fp.value = r.value;
            fp.error = r.error + line.interp_error() * std::fabs(r.value);
            fp.slow_convergence =
                !r.converged || (y == 0.0 && fp.error > 10.0 * settings.tol * std::fabs(fp.value));
            out.points[i] = fp;
        }
        out.contours.push_back({g.beta0, g.s_max, g.idx.size()});
        out.truncation = std::max(out.truncation, g.s_max);
    }
    out.contour_offset = out.contours.front().beta0;
    return out;
}

}  // namespace

FieldSample invert_field(const std::vector<std::array<double, 2>>& points, const StripConfig& cfg,
                         const Factorization& fact, const FieldSettings& settings) {
    return invert_impl(points, cfg, fact, settings, /*derivative=*/false);
}

FieldSample invert_field_dy(const std::vector<std::array<double, 2>>& points,
                            const StripConfig& cfg, const Factorization& fact,
                            const FieldSettings& settings) {
    return invert_impl(points, cfg, fact, settings, /*derivative=*/true);
}

TheoremBReport theorem_b_oracle(const std::function<cplx(double)>& transform, cplx a1,
                                const TheoremBSettings& settings) {
    TheoremBReport rep;
    rep.target = -kI * a1;
    const double s_max = settings.cutoff / settings.scale;

    auto f_at = [&](double x) {
        auto paired = [&](double t) {
            return transform(t) * std::exp(-kI * x * t) + transform(-t) * std::exp(kI * x * t);
        };
        QuadOptions opts;
        opts.rel_tol = settings.tol;
        opts.abs_tol = 1e-14 * std::abs(a1);
        opts.max_panels = 800;
        opts.throw_on_failure = false;
        const auto pts = build_panels(s_max, x, 0.0, {0.5 / settings.scale, 2.0 / settings.scale});
        cplx sum = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            sum += adaptive_gk<cplx>(paired, pts[i], pts[i + 1], opts).value;
        // analytic tail of the a1/t part: int_{|t|>S} (a1/t) e^{-ixt} dt
        const double z = std::fabs(x) * s_max;
        const cplx tail = -2.0 * kI * a1 * (x >= 0.0 ? 1.0 : -1.0) * (0.5 * kPi - sine_integral(z));
        return (sum + tail) / (2.0 * kPi);
    };

    std::array<double, 3> xh{};
    std::array<cplx, 3> fs{};
    for (int i = 0; i < 3; ++i) {
        xh[i] = settings.probes[i];
        fs[i] = f_at(settings.probes[i] * settings.scale);
        rep.probe_values[i] = fs[i];
    }
    rep.limit = extrapolate_to_zero(xh, fs);
    rep.rel_dev = std::abs(rep.limit - rep.target) / std::abs(rep.target);
    rep.negative_side_abs = std::abs(f_at(-settings.negative_probe * settings.scale));
    return rep;
}

NearTipReport near_tip_check(const StripConfig& cfg, const Factorization& fact,
                             const FieldSettings& settings) {
    cfg.validate();
    NearTipReport rep;
    const double lambda = fact.lambda();
    const double h_min = std::min(cfg.h1, cfg.h2);
    const double h = cfg.h_total();

    // flux limit mu1 dY/dy(X -> 0+, 0) through the one-sided inversion of the
    // plus transform
    {
        FactorLine line(fact, 0.0, 2.2e4 / h_min);
        TheoremBSettings tb;
        tb.scale = h_min;
        tb.cutoff = 2e4;
        tb.tol = std::min(settings.tol, 1e-7);
        auto transform = [&](double t) {
            const cplx pv = t >= 0.0 ? line.plus(t) : std::conj(line.plus(-t));
            return phi_plus_with(lambda, cplx(t, 0.0), pv);
        };
        auto tbr = theorem_b_oracle(transform, lambda / kI, tb);
        rep.flux_limit = tbr.limit.real();
        rep.flux_target = -lambda;
        rep.flux_rel_dev = std::fabs(rep.flux_limit - rep.flux_target) / lambda;
        rep.flux_negative_side = tbr.negative_side_abs;
    }

    // jump [Y](X -> 0-) and the crack-face profile Y_1(-R, 0), both on a
    // contour below the double pole
    const double beta0 = 0.45 * fact.gamma_plus();
    const double s_max = 6e4 / h;
    FactorLine line(fact, beta0, 1.01 * s_max);
    const std::vector<double> features{1.0 / cfg.h1, 1.0 / cfg.h2, lambda, fact.gamma_plus()};

    auto jump_fn = [&](cplx xi) {
        const cplx ph = phi_plus_with(lambda, xi, line.plus(xi.real()));
        return -(eval_kernel(xi, cfg) - cfg.kappa) * ph;
    };
    std::array<double, 3> xh{0.04, 0.02, 0.01};
    std::array<double, 3> js{};
    for (int i = 0; i < 3; ++i)
        js[i] = invert_contour(jump_fn, -xh[i] * h_min, beta0, s_max, settings.tol, features).value;
    rep.jump_limit = extrapolate_to_zero(xh, js);
    rep.jump_target = -cfg.kappa * lambda;
    rep.jump_rel_dev = std::fabs(rep.jump_limit - rep.jump_target) / std::fabs(rep.jump_target);

    auto face_fn = [&](cplx xi) {
        const cplx ph = phi_plus_with(lambda, xi, line.plus(xi.real()));
        return -ph * ratio_cosh_sinh(xi * cfg.h1, xi * cfg.h1) / (cfg.mu1 * xi);
    };
    const std::array<double, 5> rc{0.002, 0.004, 0.008, 0.016, 0.032};
    std::vector<double> rs(rc.size()), ys(rc.size());
    for (std::size_t i = 0; i < rc.size(); ++i) {
        rs[i] = rc[i] * h_min;
        ys[i] = invert_contour(face_fn, -rs[i], beta0, s_max, settings.tol, features).value;
    }
    // Y1(-R, 0) = Y0 - (a0/(pi mu1)) [(1 + ln b0) R - R ln R]; fit over
    // {1, R, R ln R} and read the tip value and the log-term scale
    auto coef = least_squares(
        rs, ys,
        {[](double) { return 1.0; }, [](double r) { return r; },
         [](double r) { return r * std::log(r); }});
    rep.tip_value_measured = coef[0];
    rep.tip_value_target = -cfg.kappa * lambda * cfg.mu2 / (cfg.mu1 + cfg.mu2);
    const double a0_scale = lambda / (kPi * cfg.mu1);
    rep.rlnr_slope = coef[2] / a0_scale;
    rep.b0_fitted = std::exp(-coef[1] / coef[2] - 1.0);
    return rep;
}

double transmission_residual(double x, const StripConfig& cfg, const Factorization& fact,
                             const FactorLine& line, double cutoff, double tol) {
    // invert phi_minus = -Xi phi_plus at X = x > 0; analyticity of the minus
    // function forces the result to vanish there
    const double lambda = fact.lambda();
    auto fn = [&](cplx xi) {
        const cplx ph = phi_plus_with(lambda, xi, line.plus(xi.real()));
        return -eval_kernel(xi, cfg) * ph;
    };
    const std::vector<double> features{1.0 / cfg.h1, 1.0 / cfg.h2, lambda, fact.gamma_plus()};
    return invert_contour(fn, x, line.beta0(), cutoff, tol, features).value;
}

}  // namespace bimstrip
