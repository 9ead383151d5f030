#pragma once

#include <memory>
#include <vector>

#include "scwave/coupled.hpp"
#include "scwave/soliton.hpp"

namespace scwave {

// Entropy of a symmetric Gaussian LLR density of mean m (variance 2m),
//   psi(m) = (4 pi m)^{-1/2} int dz exp(-(z-m)^2/(4m)) log2(1 + e^{-z}),
// with its analytic derivatives and the inverse.  The quadrature is a
// 4001-node trapezoid over [m - 12 sqrt(2m), m + 12 sqrt(2m)]; a series
// covers m < 1e-6.  Cached monotone tables (built lazily) serve the hot
// recursion loops; `exact=true` paths always run the quadrature.
class Psi {
public:
    static const Psi& instance();

    double value(double m) const;
    double derivative(double m) const;        // d psi / dm, kernel differentiated analytically
    double second_derivative(double m) const; // d^2 psi / dm^2

    // Newton-polished inverse to 1e-12; p must lie in (0, 1].  Means above
    // inverse_cap() are clamped (one-time note on stderr).
    double inverse(double p) const;
    static constexpr double inverse_cap() { return 500.0; }

    // interpolated fast paths (abs error ~1e-10)
    double value_fast(double m) const;
    double derivative_fast(double m) const;
    double second_derivative_fast(double m) const;
    double inverse_fast(double p) const;

    // cached monotone samples used for inversion bracketing
    const std::vector<double>& table_means() const;
    const std::vector<double>& table_values() const;

private:
    Psi() = default;
    struct Table;
    const Table& table() const;
    mutable std::shared_ptr<const Table> table_;
    mutable std::once_flag once_;
};

double psi(double m);
double psi_inv(double p);
double psi_prime(double m);
double psi_second(double m);

// Duality-consistent entropy rules for pairs of symmetric Gaussian densities.
double ga_vn_entropy(double p1, double p2); // H(x1 (*) x2)
double ga_cn_entropy(double p1, double p2); // H(x1 [+] x2)

// p -> psi((l-1) psiinv(1 - psi((r-1) psiinv(1-p))) + m_c) with the channel
// given by its Gaussian mean m_c = psiinv(H(c)).
double ga_de_step(double p, double channel_mean, int l, int r);

double ga_fixed_point_from(double p0, double channel_mean, int l, int r, const IterationOptions& opts = {},
                           int* iters = nullptr);

// Four-term GA potential from the single-system functional, pinned so that
// W_GA(0) = 0 (the pinning constant is returned by ga_potential_offset).
double ga_potential(double p, double channel_mean, int l, int r);
double ga_potential_offset(double channel_mean, int l, int r);

struct GaThresholds {
    double m_bp = 0.0; // channel mean at the algorithmic threshold
    double m_map = 0.0;
    double h_bp = 0.0; // and the matching channel entropies
    double h_map = 0.0;
};

// Thresholds within the GA model itself (channel parametrized by its mean;
// larger mean = better channel, so the bistable range is m < m_bp).
GaThresholds ga_thresholds(int l, int r, const IterationOptions& opts = {});

double ga_energy_gap(double channel_mean, int l, int r, const IterationOptions& opts = {});

// Coupled GA recursion on entropies, window w, seed block pinned to p = 0
// with a perfect channel.
void ga_coupled_step(ScalarProfile& p, double channel_mean, int l, int r);

// v_GA = DeltaE_GA / [(r-1) int P'^2 psi''((r-2) psiinv(1-P)) / psi'(psiinv(1-P))^2 dz]
double ga_velocity(const std::vector<double>& shape, double channel_mean, int l, int r,
                   const SolitonGrid& grid = {});

SolitonSolution solve_soliton_ga(double channel_mean, int l, int r, const SolitonGrid& grid = {},
                                 const SolitonOptions& opts = {});

} // namespace scwave
