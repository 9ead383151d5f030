#pragma once

#include <functional>
#include <span>
#include <vector>

namespace scwave {

// Bisection on a sign change of f over [lo, hi]; returns the midpoint after
// `steps` halvings.  Throws ConvergenceError when the bracket is invalid.
double bisect(const std::function<double(double)>& f, double lo, double hi, int steps = 60);

// Bisection on a boolean predicate which is false at lo and true at hi (or
// the reverse); returns the boundary location.
double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi, int steps = 60);

// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                          int max_depth = 24);

// Same, with explicit initial breakpoints for multi-scale integrands.
double integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints,
                          double tol = 1e-12, int max_depth = 24);

// Trapezoid rule over uniformly spaced samples.
double trapezoid(std::span<const double> values, double spacing);

// Monotone piecewise-cubic interpolant (Fritsch-Carlson).  Strictly monotone
// data stays strictly monotone; evaluation clamps to the sample range.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double min_x() const { return x_.front(); }
    double max_x() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, slope_;
};

} // namespace scwave
