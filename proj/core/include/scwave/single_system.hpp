#pragma once

#include <optional>

#include "scwave/degree_distribution.hpp"
#include "scwave/density.hpp"

namespace scwave {

struct IterationOptions {
    double tol = 1e-12;          // fixed-point stop rule |x_{t+1} - x_t|
    int max_iterations = 100000;
    double zero_threshold = 1e-7; // "reached zero" declaration
    int bisection_steps = 60;
};

struct FixedPointReport {
    double x_good = 0.0;
    std::optional<double> x_unst;
    std::optional<double> x_bad;
    double converged_from_one = 0.0;
    int iterations = 0;
};

// ---- exact scalar form on the BEC ----

// x -> eps * lambda(1 - rho(1 - x))
double bec_de_step(double x, double eps, const DegreeDistribution& d);

// W_BEC(x) = (1/R'(1))(1 - R(1-x)) - x rho(1-x) - (eps/L'(1)) L(1 - rho(1-x));
// normalized so W_BEC(0) = 0.
double bec_potential(double x, double eps, const DegreeDistribution& d);

// Fixed-point iteration from x0; returns the limit, iteration count in *iters.
double bec_fixed_point_from(double x0, double eps, const DegreeDistribution& d, const IterationOptions& opts = {},
                            int* iters = nullptr);

FixedPointReport fixed_points_bec(double eps, const DegreeDistribution& d, const IterationOptions& opts = {});

double threshold_bp_bec(const DegreeDistribution& d, const IterationOptions& opts = {});
double threshold_map_bec(const DegreeDistribution& d, const IterationOptions& opts = {});

// Delta E = W_BEC(x_bad) - W_BEC(0); throws ConvergenceError when no
// non-trivial fixed point exists.
double energy_gap_bec(double eps, const DegreeDistribution& d, const IterationOptions& opts = {});

// ---- general density form ----

// c (*) lambda^{vn}(rho^{cn}(x))
Density de_step_uncoupled(const Density& x, const Density& c, const DegreeDistribution& d);

// Single-system potential of the density form; W_s(dirac_infinity) = 0.
double potential_single(const Density& x, const Density& c, const DegreeDistribution& d);

// Density DE iterated from `from` until the entropy movement drops below
// opts.tol or the budget is spent.
Density de_fixed_point_density(const Density& c, const DegreeDistribution& d, const Density& from,
                               const IterationOptions& opts = {}, int* iters = nullptr);

// Family-level thresholds on the channel parameter (eps, crossover p, or
// sigma_n^2).  BEC delegates to the scalar recursion; BSC/BIAWGN run density
// DE on the given grid.
double threshold_bp(const DegreeDistribution& d, ChannelFamily family, const IterationOptions& opts = {},
                    std::shared_ptr<const Grid> grid = Grid::standard());
double threshold_map(const DegreeDistribution& d, ChannelFamily family, const IterationOptions& opts = {},
                     std::shared_ptr<const Grid> grid = Grid::standard());
double energy_gap(double parameter, const DegreeDistribution& d, ChannelFamily family,
                  const IterationOptions& opts = {}, std::shared_ptr<const Grid> grid = Grid::standard());

} // namespace scwave
