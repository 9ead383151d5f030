#pragma once

#include <string>
#include <string_view>

#include "scwave/polynomial.hpp"

namespace scwave {

// Edge- and node-perspective degree distributions of an LDPC ensemble.
// lambda/rho are edge perspective, L/R node perspective, linked by
// L'(y) = L'(1) lambda(y) and R'(y) = R'(1) rho(y).
struct DegreeDistribution {
    Polynomial lambda;
    Polynomial rho;
    Polynomial L;
    Polynomial R;
    double Lp1 = 0.0; // L'(1)
    double Rp1 = 0.0; // R'(1)

    static DegreeDistribution regular(int l, int r);
    static DegreeDistribution from_edge(Polynomial lambda, Polynomial rho);
    static DegreeDistribution from_node(Polynomial L, Polynomial R);

    // "3,6" for regular, "L:0.3x^2+0.6x^3+0.1x^5;R:x^4" node-perspective.
    static DegreeDistribution parse(std::string_view text);

    void validate(double tol = 1e-12) const; // throws ConfigError
    double design_rate() const { return 1.0 - Lp1 / Rp1; }
    std::string to_string() const;
};

} // namespace scwave
