#pragma once

#include <cmath>
#include <vector>

#include "scwave/coupled.hpp"
#include "scwave/degree_distribution.hpp"
#include "scwave/single_system.hpp"

namespace scwave {

// Uniform z-grid in units of the coupling window; hz = 1/per_window divides
// the unit window so the travelling-front integral equations can use
// grid-aligned trapezoid rules.
struct SolitonGrid {
    double z_min = -8.0;
    double z_max = 8.0;
    int per_window = 20; // points per unit window, hz = 1/per_window

    double hz() const { return 1.0 / per_window; }
    int points() const { return static_cast<int>(std::lround((z_max - z_min) * per_window)) + 1; }
    double z(int i) const { return z_min + i * hz(); }
};

struct SolitonOptions {
    double damping = 0.5;
    int max_sweeps = 10000;
    double shape_tol = 1e-8;
    double velocity_tol = 1e-8; // relative
    bool throw_on_nonconvergence = true;
};

struct SolitonSolution {
    std::vector<double> z;
    std::vector<double> shape;
    double velocity = 0.0;
    double residual = 0.0;    // sup-norm of the discrete shape equation
    double denominator = 0.0; // integral in the velocity formula, sign chosen positive
    double delta_e = 0.0;
    int iterations = 0;
    bool converged = false;
    double x_left = 0.0;
    double x_right = 0.0;
};

// Damped self-consistent solution of the BEC front equation
//   X(z) - v X'(z) = eps int_0^1 du lambda(1 - int_0^1 ds rho(1 - X(z-u+s)))
// with v = DeltaE / int rho'(1-X) X'^2 dz recomputed once per sweep and the
// half-height crossing recentred to z = 0.
SolitonSolution solve_soliton_bec(double eps, const DegreeDistribution& d, const SolitonGrid& grid = {},
                                  const SolitonOptions& opts = {});

// R(z) = eps int int lambda(...) + v X'(z) - X(z) on the grid.
std::vector<double> shape_residual_bec(const std::vector<double>& shape, double v, double eps,
                                       const DegreeDistribution& d, const SolitonGrid& grid = {});

// v = DeltaE(eps) / int rho'(1 - X) X'^2 dz for a given (trial) shape.
double velocity_from_shape_bec(const std::vector<double>& shape, double eps, const DegreeDistribution& d,
                               const SolitonGrid& grid = {});

// First-order expansion around eps_MAP, using the stationary front X_MAP.
struct LinearVelocityContext {
    double eps_map = 0.0;
    double x_map = 0.0;
    double denominator_map = 0.0; // int rho'(1 - X_MAP) X_MAP'^2
    DegreeDistribution ensemble;
};
LinearVelocityContext prepare_linear_bec(const DegreeDistribution& d, const SolitonGrid& grid = {},
                                         const SolitonOptions& opts = {});
double velocity_linear_bec(double eps, const LinearVelocityContext& ctx);
double velocity_linear_bec(double eps, const DegreeDistribution& d, const SolitonGrid& grid = {},
                           const SolitonOptions& opts = {});

// Discrete-profile upper bound: v_B = alpha DeltaE / (w sum_z rho'(1-x_z)(x_z - x_{z-1})^2).
double bound_vB(const ScalarProfile& stationary_profile, double eps, const DegreeDistribution& d, double alpha = 1.0);

// v_B2 = alpha DeltaE / (2 W(x_unst) - W(x_bad)); loose but cheap.
double bound_vB2(double eps, const DegreeDistribution& d, double alpha = 1.0);

} // namespace scwave
