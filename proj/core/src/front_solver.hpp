#pragma once

// Shared damped fixed-point engine for the travelling-front shape equations
// (BEC, Gaussian approximation, general scalar systems).  Internal header.

#include <functional>
#include <vector>

#include "scwave/soliton.hpp"

namespace scwave::detail {

// Trapezoid window integrals on the soliton grid, K points per unit window.
// Indices outside the grid clamp to the boundary samples.
void window_forward(const std::vector<double>& in, std::vector<double>& out, int K);  // int_0^1 f(z+s) ds
void window_backward(const std::vector<double>& in, std::vector<double>& out, int K); // int_0^1 f(z-u) du

std::vector<double> central_diff(const std::vector<double>& values, double h);

// Shift the sampled shape so that the crossing of `level` sits at z = 0;
// fractional shifts use linear interpolation, constant extrapolation at the
// ends.  Returns the applied shift in z units (0 when no crossing exists).
double recenter(std::vector<double>& shape, const SolitonGrid& grid, double level, double x_left, double x_right);

struct VelocityEstimate {
    double v = 0.0;
    double denominator = 0.0;
};

struct FrontProblem {
    // fills rhs with the window-integrated update of the shape equation
    std::function<void(const std::vector<double>& shape, std::vector<double>& rhs)> rhs;
    // velocity estimate from the current shape and its derivative
    std::function<VelocityEstimate(const std::vector<double>& shape, const std::vector<double>& deriv)> velocity;
    double x_left = 0.0;
    double x_right = 0.0;
    const char* label = "front";
};

SolitonSolution solve_front(const FrontProblem& problem, const SolitonGrid& grid, const SolitonOptions& opts);

} // namespace scwave::detail
