#include "bimstrip/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bimstrip/quadrature.hpp"

namespace bimstrip {

RootResult brent(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 int max_iter) {
    double fa = f(a), fb = f(b);
    RootResult res;
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa > 0.0) == (fb > 0.0)) {
        res.bracketed = false;
        res.root = std::fabs(fa) < std::fabs(fb) ? a : b;
        res.residual = std::min(std::fabs(fa), std::fabs(fb));
        return res;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    double c = a, fc = fa, d = b - a, e = d;
    int it = 0;
    while (fb != 0.0 && it++ < max_iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double xm = 0.5 * (c - b);
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * rel_tol * std::fabs(b);
        if (std::fabs(xm) <= tol1) break;
        if (std::fabs(e) < tol1 || std::fabs(fa) <= std::fabs(fb)) {
            d = xm;
            e = d;
        } else {
            double p, q;
            const double s = fb / fa;
            if (a != c) {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            } else {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < 3.0 * xm * q - std::fabs(tol1 * q) && p < std::fabs(0.5 * e * q)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = f(b);
    }
    res.root = b;
    res.residual = std::fabs(fb);
    res.iterations = it;
    return res;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw std::invalid_argument("spline needs >= 3 increasing knots");
    m_.assign(n, 0.0);
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
        sub[i] = h0;
        diag[i] = 2.0 * (h0 + h1);
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    // natural ends: m_0 = m_{n-1} = 0; Thomas sweep on the interior
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double h = x_[i] - x_[i - 1];
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * h;
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        const double h1 = x_[i + 1] - x_[i];
        m_[i] = (rhs[i] - (i + 2 < n ? h1 * m_[i + 1] : 0.0)) / diag[i];
        if (i == 1) break;
    }
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = x_.size();
    std::size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
    if (i == 0) i = 1;
    if (i >= n) i = n - 1;
    const double h = x_[i] - x_[i - 1];
    const double a = (x_[i] - x) / h, b = (x - x_[i - 1]) / h;
    return a * y_[i - 1] + b * y_[i] +
           ((a * a * a - a) * m_[i - 1] + (b * b * b - b) * m_[i + 0]) * h * h / 6.0;
}

std::vector<double> least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                  const std::vector<std::function<double(double)>>& basis) {
    const std::size_t k = basis.size(), n = x.size();
    if (n < k) throw std::invalid_argument("least_squares: fewer points than basis functions");
    // normal equations; k <= 4 so a dense Gaussian solve is plenty
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<double> phi(k);
        for (std::size_t i = 0; i < k; ++i) phi[i] = basis[i](x[p]);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a[i][j] += phi[i] * phi[j];
            a[i][k] += phi[i] * y[p];
        }
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        if (a[col][col] == 0.0) throw std::runtime_error("least_squares: singular system");
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double w = a[r][col] / a[col][col];
            for (std::size_t cc = col; cc <= k; ++cc) a[r][cc] -= w * a[col][cc];
        }
    }
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = a[i][k] / a[i][i];
    return out;
}

std::vector<double> make_breakpoints(std::initializer_list<double> interior, double lo, double hi) {
    std::vector<double> pts{lo};
    std::vector<double> in(interior);
    std::sort(in.begin(), in.end());
    for (double p : in)
        if (p > lo && p < hi && (pts.empty() || p > pts.back())) pts.push_back(p);
    pts.push_back(hi);
    return pts;
}

}  // namespace bimstrip
