#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimstrip {

struct QuadratureError : std::runtime_error {
    double worst_a;
    double worst_b;
    double worst_err;
    QuadratureError(const std::string& msg, double a, double b, double err)
        : std::runtime_error(msg + " (worst subinterval [" + std::to_string(a) + ", " +
                             std::to_string(b) + "], panel error " + std::to_string(err) + ")"),
          worst_a(a), worst_b(b), worst_err(err) {}
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;      // absolute floor; 0 means purely relative
    int max_panels = 20000;
    bool throw_on_failure = true;
};

template <typename T>
struct QuadResult {
    T value{};
    double error = 0.0;
    long evals = 0;
    bool converged = true;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        evals += o.evals;
        converged = converged && o.converged;
        return *this;
    }
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]; column 0: |node|, 1: Gauss weight, 2: Kronrod weight.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <typename T>
struct GkPanel {
    double a, b, err;
    T val;
    bool operator<(const GkPanel& o) const { return err < o.err; }
};

template <typename T, typename F>
GkPanel<T> gk15_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T y0 = f(mid);
    T g7 = kGK15[0][1] * y0;
    T k15 = kGK15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        T yi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * yi;
        k15 += kGK15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    double err = std::abs(g7 - k15);
    if (!(err == err)) err = HUGE_VAL;  // NaN anywhere in the panel
    return {a, b, err, k15};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]; T is double or
/// std::complex<double>. |G7 - K15| serves as the (conservative) panel error.
/// Non-convergence after max_panels raises QuadratureError carrying the worst
/// subinterval, or returns converged = false when throw_on_failure is off.
template <typename T, typename F>
QuadResult<T> adaptive_gk(F&& f, double a, double b, const QuadOptions& opts = {}) {
    QuadResult<T> total;
    if (a == b) return total;

    std::priority_queue<detail::GkPanel<T>> heap;
    auto first = detail::gk15_panel<T>(f, a, b);
    total.evals = 15;
    T sum = first.val;
    double err_sum = first.err;
    heap.push(first);
    int panels = 1;

    while (err_sum > std::max(opts.abs_tol, opts.rel_tol * std::abs(sum))) {
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.err == 0.0 || mid <= worst.a || mid >= worst.b) break;  // at resolution limit
        if (panels >= opts.max_panels) {
            total.value = sum;
            total.error = err_sum;
            total.converged = false;
            if (opts.throw_on_failure)
                throw QuadratureError("adaptive quadrature did not converge", worst.a, worst.b,
                                      worst.err);
            return total;
        }
        heap.pop();
        auto left = detail::gk15_panel<T>(f, worst.a, mid);
        auto right = detail::gk15_panel<T>(f, mid, worst.b);
        total.evals += 30;
        sum += left.val + right.val - worst.val;
        err_sum += left.err + right.err - worst.err;
        if (err_sum < 0.0) err_sum = 0.0;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    total.value = sum;
    total.error = err_sum;
    return total;
}

/// Same, over an ascending breakpoint list.
template <typename T, typename F>
QuadResult<T> adaptive_gk_pts(F&& f, const std::vector<double>& pts, const QuadOptions& opts = {}) {
    QuadResult<T> total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += adaptive_gk<T>(f, pts[i], pts[i + 1], opts);
    return total;
}

/// Ascending breakpoints clipped to [lo, hi], deduplicated, endpoints included.
std::vector<double> make_breakpoints(std::initializer_list<double> interior, double lo, double hi);

}  // namespace bimstrip
