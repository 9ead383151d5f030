#include "scwave/soliton.hpp"

#include <cmath>

#include "front_solver.hpp"
#include "scwave/errors.hpp"
#include "scwave/numerics.hpp"

namespace scwave {

namespace {

// eps int_0^1 du lambda(1 - int_0^1 ds rho(1 - X(z-u+s)))
void bec_rhs(const std::vector<double>& shape, std::vector<double>& out, double eps, const DegreeDistribution& d,
             int K) {
    std::vector<double> q(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) q[i] = d.rho(1.0 - shape[i]);
    std::vector<double> inner;
    detail::window_forward(q, inner, K);
    for (size_t i = 0; i < inner.size(); ++i) inner[i] = d.lambda(1.0 - inner[i]);
    detail::window_backward(inner, out, K);
    for (double& v : out) v *= eps;
}

double bec_denominator(const std::vector<double>& shape, const std::vector<double>& deriv,
                       const DegreeDistribution& d, double hz) {
    const Polynomial rho_prime = d.rho.derivative();
    std::vector<double> integrand(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) integrand[i] = rho_prime(1.0 - shape[i]) * deriv[i] * deriv[i];
    return trapezoid(integrand, hz);
}

struct BecGapInfo {
    double x_bad = 0.0;
    double delta_e = 0.0;
};

BecGapInfo bec_gap(double eps, const DegreeDistribution& d) {
    const IterationOptions opts;
    const double x_bad = bec_fixed_point_from(1.0, eps, d, opts);
    if (x_bad < opts.zero_threshold)
        throw ConfigError("eps is below the BP threshold: no non-trivial fixed point to pin the front");
    const double delta_e = bec_potential(x_bad, eps, d);
    if (delta_e < -1e-9)
        throw ConfigError("eps is above the MAP threshold: the energy gap is negative and the wave stalls");
    return {x_bad, std::max(delta_e, 0.0)};
}

} // namespace

SolitonSolution solve_soliton_bec(double eps, const DegreeDistribution& d, const SolitonGrid& grid,
                                  const SolitonOptions& opts) {
    const BecGapInfo gap = bec_gap(eps, d);

    detail::FrontProblem problem;
    problem.label = "bec soliton";
    problem.x_left = 0.0;
    problem.x_right = gap.x_bad;
    problem.rhs = [&, eps](const std::vector<double>& shape, std::vector<double>& out) {
        bec_rhs(shape, out, eps, d, grid.per_window);
    };
    problem.velocity = [&, gap](const std::vector<double>& shape,
                                const std::vector<double>& deriv) -> detail::VelocityEstimate {
        const double denom = bec_denominator(shape, deriv, d, grid.hz());
        if (denom <= 0.0) throw ConvergenceError("vanishing denominator in the velocity formula");
        return {gap.delta_e / denom, denom};
    };

    SolitonSolution sol = detail::solve_front(problem, grid, opts);
    sol.delta_e = gap.delta_e;
    return sol;
}

std::vector<double> shape_residual_bec(const std::vector<double>& shape, double v, double eps,
                                       const DegreeDistribution& d, const SolitonGrid& grid) {
    if (static_cast<int>(shape.size()) != grid.points()) throw ConfigError("shape not aligned to the soliton grid");
    std::vector<double> rhs;
    bec_rhs(shape, rhs, eps, d, grid.per_window);
    const std::vector<double> deriv = detail::central_diff(shape, grid.hz());
    std::vector<double> res(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) res[i] = rhs[i] + v * deriv[i] - shape[i];
    return res;
}

double velocity_from_shape_bec(const std::vector<double>& shape, double eps, const DegreeDistribution& d,
                               const SolitonGrid& grid) {
    const BecGapInfo gap = bec_gap(eps, d);
    const std::vector<double> deriv = detail::central_diff(shape, grid.hz());
    const double denom = bec_denominator(shape, deriv, d, grid.hz());
    if (denom <= 0.0) throw ConvergenceError("vanishing denominator in the velocity formula");
    return gap.delta_e / denom;
}

LinearVelocityContext prepare_linear_bec(const DegreeDistribution& d, const SolitonGrid& grid,
                                         const SolitonOptions& opts) {
    LinearVelocityContext ctx;
    ctx.ensemble = d;
    ctx.eps_map = threshold_map_bec(d);
    const SolitonSolution at_map = solve_soliton_bec(ctx.eps_map, d, grid, opts);
    ctx.x_map = at_map.x_right;
    ctx.denominator_map = at_map.denominator;
    return ctx;
}

double velocity_linear_bec(double eps, const LinearVelocityContext& ctx) {
    const DegreeDistribution& d = ctx.ensemble;
    const double numer = (ctx.eps_map - eps) / d.Lp1 * d.L(1.0 - d.rho(1.0 - ctx.x_map));
    return numer / ctx.denominator_map;
}

double velocity_linear_bec(double eps, const DegreeDistribution& d, const SolitonGrid& grid,
                           const SolitonOptions& opts) {
    return velocity_linear_bec(eps, prepare_linear_bec(d, grid, opts));
}

double bound_vB(const ScalarProfile& profile, double eps, const DegreeDistribution& d, double alpha) {
    const BecGapInfo gap = bec_gap(eps, d);
    const Polynomial rho_prime = d.rho.derivative();
    double sum = 0.0;
    for (int i = 1; i < profile.size(); ++i) {
        const double x = profile.values[static_cast<size_t>(i)];
        const double dx = x - profile.values[static_cast<size_t>(i - 1)];
        sum += rho_prime(1.0 - x) * dx * dx;
    }
    if (sum <= 0.0) throw ConvergenceError("flat profile in bound_vB");
    return alpha * gap.delta_e / (profile.w * sum);
}

double bound_vB2(double eps, const DegreeDistribution& d, double alpha) {
    const FixedPointReport fp = fixed_points_bec(eps, d);
    if (!fp.x_bad || !fp.x_unst) throw ConvergenceError("bound_vB2 needs both non-trivial fixed points");
    const double w_bad = bec_potential(*fp.x_bad, eps, d);
    const double w_unst = bec_potential(*fp.x_unst, eps, d);
    const double denom = 2.0 * w_unst - w_bad;
    if (denom <= 0.0) throw ConvergenceError("vanishing denominator in bound_vB2");
    return alpha * w_bad / denom;
}

} // namespace scwave
