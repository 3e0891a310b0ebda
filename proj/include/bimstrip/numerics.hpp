#pragma once

#include <functional>
#include <vector>

namespace bimstrip {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool bracketed = true;
};

/// Brent's method on a sign-changing bracket [a, b]; rel_tol is on the root.
RootResult brent(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-14, int max_iter = 200);

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
/// Evaluation outside the knot range clamps to the end cubics.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

/// Solve the least-squares fit y ~ sum_k c_k basis_k(x) for small k (<= 4).
std::vector<double> least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                  const std::vector<std::function<double(double)>>& basis);

}  // namespace bimstrip
