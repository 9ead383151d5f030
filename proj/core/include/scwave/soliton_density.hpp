#pragma once

#include <vector>

#include "scwave/degree_distribution.hpp"
#include "scwave/density.hpp"
#include "scwave/single_system.hpp"
#include "scwave/soliton.hpp"

namespace scwave {

// Density-valued travelling front for general BMS channels.
struct DensitySolitonSolution {
    std::vector<double> z;
    std::vector<Density> shape;
    std::vector<double> entropy_shape; // H(X(z)) per grid point
    double velocity = 0.0;
    double denominator = 0.0;
    double delta_e = 0.0;
    double residual = 0.0; // sup over z of the entropy change in the last sweep
    int iterations = 0;
    bool converged = false;
};

// v = DeltaE / ( - int dz H(rho'^cn(X(z)) cn X'(z)^{cn 2}) ); the entropy
// integral is negative for increasing fronts, so v >= 0 whenever DeltaE >= 0.
double velocity_general_bms(const std::vector<Density>& shape, const Density& channel, const DegreeDistribution& d,
                            const SolitonGrid& grid = {});

struct DensitySolitonOptions {
    double damping = 0.5;
    int max_sweeps = 2000;
    double shape_tol = 1e-8;     // sup entropy change per sweep
    double velocity_tol = 1e-8;  // relative
    bool throw_on_nonconvergence = true;
    // guard against runaway grids: points() * node_count must stay below this
    long max_state_doubles = 32000000;
};

DensitySolitonSolution solve_soliton_general(const Density& channel, const DegreeDistribution& d,
                                             const SolitonGrid& grid = {}, const DensitySolitonOptions& opts = {});

} // namespace scwave
