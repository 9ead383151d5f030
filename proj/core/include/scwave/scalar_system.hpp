#pragma once

#include <functional>
#include <optional>
#include <string>

#include "scwave/coupled.hpp"
#include "scwave/degree_distribution.hpp"
#include "scwave/single_system.hpp"
#include "scwave/soliton.hpp"

namespace scwave {

// General scalar coupled system x <- f(g(x; eps); eps) with both maps
// non-decreasing in both arguments.  F and G are the antiderivatives entering
// the potential U_s(x) = x g(x) - G(x) - F(g(x)), F taken from g(0).
struct ScalarSystem {
    std::string label;
    std::function<double(double y, double eps)> f;
    std::function<double(double x, double eps)> g;
    std::function<double(double x, double eps)> g_prime;
    std::function<double(double x, double eps)> G;
    std::function<double(double y, double eps)> F;
    double x_max = 1.0;
    double eps_max = 1.0;
    // true when the bistable phase sits below the algorithmic threshold
    // (compressive sensing: fewer measurements = worse)
    bool control_decreasing = false;

    double y_max(double eps) const { return g(x_max, eps); }
};

double scalar_de_step(double x, const ScalarSystem& sys, double eps);

// U_s normalized so U_s(0) = 0 (automatic with F anchored at g(0)).
double scalar_potential(double x, const ScalarSystem& sys, double eps);

struct ScalarFixedPointSet {
    double x_good = 0.0;
    std::optional<double> x_unst;
    std::optional<double> x_bad;
};

ScalarFixedPointSet scalar_fixed_points(const ScalarSystem& sys, double eps, const IterationOptions& opts = {});

struct ScalarFixedPoints {
    double x_good = 0.0;
    std::optional<double> x_unst;
    std::optional<double> x_bad;
    double eps_a = 0.0;   // algorithmic threshold
    double eps_pot = 0.0; // potential threshold, DeltaE(eps_pot) = 0
};

// Thresholds by bisection; the fixed points are reported at eps_pot.
ScalarFixedPoints scalar_thresholds(const ScalarSystem& sys, const IterationOptions& opts = {});

// DeltaE = U_s(x_bad) - U_s(x_good); throws when x_bad is absent.
double scalar_energy_gap(const ScalarSystem& sys, double eps, const IterationOptions& opts = {});

// Travelling front between x_good and x_bad:
//   X(z) - v X'(z) = int_0^1 du f(int_0^1 ds g(X(z-u+s)))
//   v = DeltaE / int g'(X) X'^2 dz
SolitonSolution scalar_soliton(const ScalarSystem& sys, double eps, const SolitonGrid& grid = {},
                               const SolitonOptions& opts = {});

// Coupled recursion Eq-style: x_z <- (1/w) sum_j f((1/w) sum_k g(x_{z-j+k})),
// seed block pinned to x_good on z in {-w+1, ..., -1}.
void scalar_coupled_step(ScalarProfile& p, const ScalarSystem& sys, double eps);

// Discrete coupled potential (diagnostic):
//   U(x) = sum_z [x_z g(x_z) - G(x_z)] - sum_z F((1/w) sum_i g(x_{z+i}))
double coupled_potential_scalar(const ScalarProfile& p, const ScalarSystem& sys, double eps);

// ---- concrete systems ----

// LDPC on the BEC: f(y) = eps lambda(y), g(x) = 1 - rho(1-x); U_s equals the
// BEC potential of the single system exactly.
ScalarSystem bec_scalar_system(const DegreeDistribution& d);

// GLDPC with BCH component decoding e errors: f(y) = eps y and g the
// regularized incomplete beta tail I_x(e, n-e).
ScalarSystem gldpc_system(int n, int e);

// Binomial tail sum_{i=e}^{n-1} C(n-1,i) x^i (1-x)^{n-1-i}; used directly for
// n <= 30, via the continued-fraction incomplete beta otherwise.
double gldpc_g(int n, int e, double x);
double gldpc_g_binomial_sum(int n, int e, double x);
double gldpc_g_prime(int n, int e, double x);

// Regularized incomplete beta I_x(a, b), Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// AMP state evolution for the Bernoulli-Gaussian prior
// (1-rho) delta_0 + rho N(0,1): control parameter delta,
// f(y; delta) = mmse(snr - y), g(x; delta) = snr - 1/(1/snr + x/delta),
// x_max = mmse(0) = rho.
ScalarSystem cs_system(double rho, double snr);

// mmse(s) = E[(S - E[S|sqrt(s) S + Z])^2] under the mixture prior above;
// adaptive quadrature.
double mmse_bernoulli_gaussian(double s, double rho);

// I(S; sqrt(s) S + Z) in nats.
double mutual_info_bernoulli_gaussian(double s, double rho);

// U_CS via the generic construction (exact quadrature path).
double cs_potential(double x, double delta, double rho, double snr);

} // namespace scwave
