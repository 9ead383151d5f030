#pragma once

#include <optional>
#include <span>
#include <string>

#include "scwave/degree_distribution.hpp"
#include "scwave/soliton.hpp"

namespace scwave {

struct GammaReport {
    std::string ensemble;
    double eps_eval = 0.0;
    double gamma_bar = 0.0;
    double gamma_bar_limit = 0.0;
    std::optional<double> published_gamma;
};

// gamma_bar = x_bad(eps) * v_pos(eps) / (eps_map - eps) where v_pos is the
// front velocity in positions per iteration of the structured (l,r,L_c)
// ensemble (coupling window l), i.e. l times the w-normalized velocity of
// the analytic front solver.  Regular ensembles only.
double gamma_bar(const DegreeDistribution& d, double eps, const SolitonGrid& grid = {},
                 const SolitonOptions& opts = {});
// with a precomputed eps_map (saves the threshold bisection)
double gamma_bar(const DegreeDistribution& d, double eps, double eps_map, const SolitonGrid& grid = {},
                 const SolitonOptions& opts = {});

// eps -> eps_map limit: x_map L(1 - rho(1 - x_map)) / (L'(1) * denom_map),
// equal to x_map times the slope of the linear velocity approximation.
double gamma_bar_limit(const DegreeDistribution& d, const SolitonGrid& grid = {}, const SolitonOptions& opts = {});
double gamma_bar_limit(const LinearVelocityContext& ctx);

GammaReport gamma_report(const DegreeDistribution& d, double delta_eps = 0.04, const SolitonGrid& grid = {},
                         const SolitonOptions& opts = {});

// Externally measured scaling parameters for the structured (l,r,L_c=100)
// ensembles, shipped as comparison constants.
struct PublishedGamma {
    int l;
    int r;
    double eps_map;
    double gamma;
};

std::span<const PublishedGamma> published_gamma_table();
std::optional<PublishedGamma> published_gamma(int l, int r);

} // namespace scwave
