#include "front_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scwave/errors.hpp"

namespace scwave::detail {

namespace {

double at_clamped(const std::vector<double>& v, int i) {
    if (i < 0) i = 0;
    if (i >= static_cast<int>(v.size())) i = static_cast<int>(v.size()) - 1;
    return v[static_cast<size_t>(i)];
}

} // namespace

void window_forward(const std::vector<double>& in, std::vector<double>& out, int K) {
    const int n = static_cast<int>(in.size());
    out.resize(in.size());
    for (int i = 0; i < n; ++i) {
        double acc = 0.5 * (at_clamped(in, i) + at_clamped(in, i + K));
        for (int k = 1; k < K; ++k) acc += at_clamped(in, i + k);
        out[static_cast<size_t>(i)] = acc / K;
    }
}

void window_backward(const std::vector<double>& in, std::vector<double>& out, int K) {
    const int n = static_cast<int>(in.size());
    out.resize(in.size());
    for (int i = 0; i < n; ++i) {
        double acc = 0.5 * (at_clamped(in, i) + at_clamped(in, i - K));
        for (int k = 1; k < K; ++k) acc += at_clamped(in, i - k);
        out[static_cast<size_t>(i)] = acc / K;
    }
}

std::vector<double> central_diff(const std::vector<double>& values, double h) {
    const int n = static_cast<int>(values.size());
    std::vector<double> d(values.size());
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            d[0] = (values[1] - values[0]) / h;
        else if (i == n - 1)
            d[static_cast<size_t>(n - 1)] = (values[static_cast<size_t>(n - 1)] - values[static_cast<size_t>(n - 2)]) / h;
        else
            d[static_cast<size_t>(i)] = (values[static_cast<size_t>(i + 1)] - values[static_cast<size_t>(i - 1)]) / (2.0 * h);
    }
    return d;
}

double recenter(std::vector<double>& shape, const SolitonGrid& grid, double level, double x_left, double x_right) {
    const int n = static_cast<int>(shape.size());
    // interpolated crossing of `level`
    double z_cross = 0.0;
    bool found = false;
    for (int i = 0; i + 1 < n; ++i) {
        if (shape[static_cast<size_t>(i)] < level && shape[static_cast<size_t>(i + 1)] >= level) {
            const double frac =
                (level - shape[static_cast<size_t>(i)]) / (shape[static_cast<size_t>(i + 1)] - shape[static_cast<size_t>(i)]);
            z_cross = grid.z(i) + frac * grid.hz();
            found = true;
            break;
        }
    }
    if (!found) return 0.0;

    std::vector<double> shifted(shape.size());
    for (int i = 0; i < n; ++i) {
        const double z = grid.z(i) + z_cross; // sample the old shape at z + shift
        const double pos = (z - grid.z_min) / grid.hz();
        if (pos <= 0.0) {
            shifted[static_cast<size_t>(i)] = x_left;
        } else if (pos >= n - 1) {
            shifted[static_cast<size_t>(i)] = x_right;
        } else {
            const int k = static_cast<int>(pos);
            const double frac = pos - k;
            shifted[static_cast<size_t>(i)] =
                (1.0 - frac) * shape[static_cast<size_t>(k)] + frac * shape[static_cast<size_t>(k + 1)];
        }
    }
    shape = std::move(shifted);
    return z_cross;
}

SolitonSolution solve_front(const FrontProblem& problem, const SolitonGrid& grid, const SolitonOptions& opts) {
    const int n = grid.points();
    if (n < 2 * grid.per_window + 3) throw ConfigError("soliton grid too small for the coupling window");

    SolitonSolution sol;
    sol.x_left = problem.x_left;
    sol.x_right = problem.x_right;
    sol.z.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sol.z[static_cast<size_t>(i)] = grid.z(i);

    // smooth ramp between the boundary values, centred at z = 0
    std::vector<double> shape(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double ramp = 0.5 * (1.0 + std::erf(grid.z(i)));
        shape[static_cast<size_t>(i)] = problem.x_left + (problem.x_right - problem.x_left) * ramp;
    }

    const double level = problem.x_left + 0.5 * (problem.x_right - problem.x_left);
    std::vector<double> rhs(shape.size());
    double v_prev = 0.0;
    int sweep = 0;
    bool converged = false;
    VelocityEstimate vel;

    // the damped iteration can limit-cycle for fast fronts; halve the
    // damping whenever progress stalls (deterministic)
    double damping = opts.damping;
    double best_sup = std::numeric_limits<double>::infinity();
    int last_improvement = 0;

    for (; sweep < opts.max_sweeps; ++sweep) {
        const std::vector<double> deriv = central_diff(shape, grid.hz());
        vel = problem.velocity(shape, deriv);
        problem.rhs(shape, rhs);

        std::vector<double> next(shape.size());
        for (int i = 0; i < n; ++i)
            next[static_cast<size_t>(i)] = (1.0 - damping) * shape[static_cast<size_t>(i)] +
                                           damping * (rhs[static_cast<size_t>(i)] + vel.v * deriv[static_cast<size_t>(i)]);
        next.front() = problem.x_left;
        next.back() = problem.x_right;
        recenter(next, grid, level, problem.x_left, problem.x_right);

        double sup = 0.0;
        for (size_t i = 0; i < shape.size(); ++i) sup = std::max(sup, std::abs(next[i] - shape[i]));
        const double dv = std::abs(vel.v - v_prev) / std::max(std::abs(vel.v), 1e-12);
        shape = std::move(next);
        v_prev = vel.v;
        if (sup < opts.shape_tol && dv < opts.velocity_tol) {
            converged = true;
            ++sweep;
            break;
        }
        if (sup < 0.5 * best_sup) {
            best_sup = sup;
            last_improvement = sweep;
        } else if (sweep - last_improvement > 200 && damping > 0.05) {
            damping *= 0.5;
            best_sup = sup;
            last_improvement = sweep;
        }
    }

    // residual of the discrete shape equation at exit
    const std::vector<double> deriv = central_diff(shape, grid.hz());
    vel = problem.velocity(shape, deriv);
    problem.rhs(shape, rhs);
    double res = 0.0;
    for (int i = 0; i < n; ++i)
        res = std::max(res, std::abs(rhs[static_cast<size_t>(i)] + vel.v * deriv[static_cast<size_t>(i)] -
                                     shape[static_cast<size_t>(i)]));

    sol.shape = std::move(shape);
    sol.velocity = vel.v;
    sol.denominator = vel.denominator;
    sol.residual = res;
    sol.iterations = sweep;
    sol.converged = converged;
    if (!converged && opts.throw_on_nonconvergence)
        throw ConvergenceError(std::string(problem.label) + " solver did not converge");
    return sol;
}

} // namespace scwave::detail
