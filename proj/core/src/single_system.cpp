#include "scwave/single_system.hpp"

#include <cmath>

#include "scwave/errors.hpp"
#include "scwave/numerics.hpp"

namespace scwave {

double bec_de_step(double x, double eps, const DegreeDistribution& d) {
    return eps * d.lambda(1.0 - d.rho(1.0 - x));
}

double bec_potential(double x, double eps, const DegreeDistribution& d) {
    const double rx = d.rho(1.0 - x);
    return (1.0 - d.R(1.0 - x)) / d.Rp1 - x * rx - eps / d.Lp1 * d.L(1.0 - rx);
}

double bec_fixed_point_from(double x0, double eps, const DegreeDistribution& d, const IterationOptions& opts,
                            int* iters) {
    double x = x0;
    int t = 0;
    for (; t < opts.max_iterations; ++t) {
        const double next = bec_de_step(x, eps, d);
        const double delta = std::abs(next - x);
        x = next;
        if (delta < opts.tol) break;
    }
    if (iters) *iters = t;
    return x;
}

FixedPointReport fixed_points_bec(double eps, const DegreeDistribution& d, const IterationOptions& opts) {
    if (eps < 0.0 || eps > 1.0) throw ConfigError("eps outside [0,1]");
    FixedPointReport report;
    int it_good = 0, it_one = 0;
    // x_good from 0+: stays at 0 for stable ensembles, climbs to the smallest
    // non-trivial fixed point when x = 0 is unstable.
    const double x_good = bec_fixed_point_from(1e-8, eps, d, opts, &it_good);
    report.x_good = x_good < opts.zero_threshold ? 0.0 : x_good;
    report.converged_from_one = bec_fixed_point_from(1.0, eps, d, opts, &it_one);
    report.iterations = it_good + it_one;
    if (report.converged_from_one > report.x_good + opts.zero_threshold) {
        report.x_bad = report.converged_from_one;
        const double lo = report.x_good + 1e-9;
        const double hi = *report.x_bad * (1.0 - 1e-9);
        auto f = [&](double x) { return bec_de_step(x, eps, d) - x; };
        if (f(lo) < 0.0 && f(hi) > 0.0) report.x_unst = bisect(f, lo, hi, opts.bisection_steps);
    }
    return report;
}

namespace {

bool bec_decodes(double eps, const DegreeDistribution& d, const IterationOptions& opts) {
    double x = 1.0;
    for (int t = 0; t < opts.max_iterations; ++t) {
        const double next = bec_de_step(x, eps, d);
        if (next < opts.zero_threshold) return true;
        if (std::abs(next - x) < opts.tol) return false;
        x = next;
    }
    return x < opts.zero_threshold;
}

} // namespace

double threshold_bp_bec(const DegreeDistribution& d, const IterationOptions& opts) {
    auto decodes = [&](double eps) { return bec_decodes(eps, d, opts); };
    if (!decodes(1e-3)) throw ConvergenceError("ensemble does not decode even at eps = 1e-3");
    if (decodes(1.0)) return 1.0;
    return bisect_predicate(decodes, 1e-3, 1.0, opts.bisection_steps);
}

double energy_gap_bec(double eps, const DegreeDistribution& d, const IterationOptions& opts) {
    const double x_bad = bec_fixed_point_from(1.0, eps, d, opts);
    if (x_bad < opts.zero_threshold) throw ConvergenceError("no non-trivial fixed point at this eps");
    const double x_good = bec_fixed_point_from(1e-8, eps, d, opts);
    return bec_potential(x_bad, eps, d) - bec_potential(x_good < opts.zero_threshold ? 0.0 : x_good, eps, d);
}

double threshold_map_bec(const DegreeDistribution& d, const IterationOptions& opts) {
    const double eps_bp = threshold_bp_bec(d, opts);
    auto gap = [&](double eps) { return energy_gap_bec(eps, d, opts); };
    double lo = std::min(eps_bp * (1.0 + 1e-6), 1.0);
    if (gap(1.0) >= 0.0) return 1.0;
    return bisect(gap, lo, 1.0, opts.bisection_steps);
}

// ---- density form ----

Density de_step_uncoupled(const Density& x, const Density& c, const DegreeDistribution& d) {
    return vn_convolve(c, poly_lift_vn(d.lambda, poly_lift_cn(d.rho, x)));
}

double potential_single(const Density& x, const Density& c, const DegreeDistribution& d) {
    const Density rho_x = poly_lift_cn(d.rho, x);
    const double t1 = entropy(poly_lift_cn(d.R, x)) / d.Rp1;
    const double t2 = entropy(rho_x);
    const double t3 = entropy(cn_convolve(x, rho_x));
    const double t4 = entropy(vn_convolve(c, poly_lift_vn(d.L, rho_x))) / d.Lp1;
    return t1 + t2 - t3 - t4;
}

Density de_fixed_point_density(const Density& c, const DegreeDistribution& d, const Density& from,
                               const IterationOptions& opts, int* iters) {
    Density x = from;
    double h = entropy(x);
    int t = 0;
    for (; t < opts.max_iterations; ++t) {
        x = de_step_uncoupled(x, c, d);
        const double hn = entropy(x);
        const double delta = std::abs(hn - h);
        h = hn;
        if (delta < opts.tol || h < opts.zero_threshold) break;
    }
    if (iters) *iters = t;
    return x;
}

namespace {

struct FamilyRange {
    double lo;
    double hi;
};

FamilyRange family_parameter_range(ChannelFamily family) {
    switch (family) {
    case ChannelFamily::bec: return {1e-3, 1.0};
    case ChannelFamily::bsc: return {1e-3, 0.5};
    case ChannelFamily::biawgn: return {0.4, 6.0};
    }
    throw ConfigError("bad channel family");
}

bool density_decodes(double parameter, const DegreeDistribution& d, ChannelFamily family,
                     const IterationOptions& opts, const std::shared_ptr<const Grid>& grid) {
    const Density c = channel_density(ChannelSpec{family, parameter, 0.0}, grid);
    Density x = dirac_zero(grid);
    double h = entropy(x);
    for (int t = 0; t < opts.max_iterations; ++t) {
        x = de_step_uncoupled(x, c, d);
        const double hn = entropy(x);
        if (hn < opts.zero_threshold) return true;
        if (std::abs(hn - h) < opts.tol) return false;
        h = hn;
    }
    return false;
}

} // namespace

double threshold_bp(const DegreeDistribution& d, ChannelFamily family, const IterationOptions& opts,
                    std::shared_ptr<const Grid> grid) {
    if (family == ChannelFamily::bec) return threshold_bp_bec(d, opts);
    const auto range = family_parameter_range(family);
    auto decodes = [&](double p) { return density_decodes(p, d, family, opts, grid); };
    if (!decodes(range.lo)) throw ConvergenceError("ensemble does not decode at the benign end of the family");
    if (decodes(range.hi)) return range.hi;
    return bisect_predicate(decodes, range.lo, range.hi, opts.bisection_steps);
}

double energy_gap(double parameter, const DegreeDistribution& d, ChannelFamily family, const IterationOptions& opts,
                  std::shared_ptr<const Grid> grid) {
    if (family == ChannelFamily::bec) return energy_gap_bec(parameter, d, opts);
    const Density c = channel_density(ChannelSpec{family, parameter, 0.0}, grid);
    const Density x_bad = de_fixed_point_density(c, d, dirac_zero(grid), opts);
    if (entropy(x_bad) < opts.zero_threshold) throw ConvergenceError("no non-trivial fixed point at this parameter");
    return potential_single(x_bad, c, d); // W_s(dirac_infinity) = 0
}

double threshold_map(const DegreeDistribution& d, ChannelFamily family, const IterationOptions& opts,
                     std::shared_ptr<const Grid> grid) {
    if (family == ChannelFamily::bec) return threshold_map_bec(d, opts);
    const double bp = threshold_bp(d, family, opts, grid);
    const auto range = family_parameter_range(family);
    auto gap = [&](double p) { return energy_gap(p, d, family, opts, grid); };
    const double lo = bp * (1.0 + 1e-6);
    if (gap(range.hi) >= 0.0) return range.hi;
    return bisect(gap, lo, range.hi, opts.bisection_steps);
}

} // namespace scwave
