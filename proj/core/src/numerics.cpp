#include "scwave/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "scwave/errors.hpp"

namespace scwave {

double bisect(const std::function<double(double)>& f, double lo, double hi, int steps) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw ConvergenceError("bisection bracket has no sign change");
    for (int i = 0; i < steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi, int steps) {
    const bool plo = pred(lo);
    if (pred(hi) == plo) throw ConvergenceError("predicate bisection bracket does not flip");
    for (int i = 0; i < steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) == plo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    // never chase tolerances below the rounding floor of the segment
    const double floor = 1e-16 * (std::abs(left) + std::abs(right)) + 1e-300;
    if (depth <= 0 || std::abs(delta) <= 15.0 * std::max(tol, floor)) return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_step(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, max_depth);
}

double integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints, double tol,
                          int max_depth) {
    double total = 0.0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        total += integrate_adaptive(f, breakpoints[i], breakpoints[i + 1], tol, max_depth);
    return total;
}

double trapezoid(std::span<const double> values, double spacing) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * spacing;
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.size() < 2) throw ConfigError("monotone cubic needs >= 2 samples");
    const size_t n = x_.size();
    std::vector<double> d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        const double dx = x_[i + 1] - x_[i];
        if (dx <= 0.0) throw ConfigError("monotone cubic needs strictly increasing x");
        d[i] = (y_[i + 1] - y_[i]) / dx;
    }
    slope_.assign(n, 0.0);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slope_[i] = 0.0;
        } else {
            // harmonic mean weighting keeps the interpolant monotone
            const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
            const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const size_t i = static_cast<size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

} // namespace scwave
