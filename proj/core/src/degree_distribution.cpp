#include "scwave/degree_distribution.hpp"

#include <cmath>
#include <sstream>

#include "scwave/errors.hpp"

namespace scwave {

DegreeDistribution DegreeDistribution::regular(int l, int r) {
    if (l < 2 || r < 2) throw ConfigError("regular ensemble needs l >= 2 and r >= 2");
    DegreeDistribution d;
    d.lambda = Polynomial::monomial(l - 1);
    d.rho = Polynomial::monomial(r - 1);
    d.L = Polynomial::monomial(l);
    d.R = Polynomial::monomial(r);
    d.Lp1 = l;
    d.Rp1 = r;
    return d;
}

DegreeDistribution DegreeDistribution::from_edge(Polynomial lambda, Polynomial rho) {
    DegreeDistribution d;
    const Polynomial li = lambda.antiderivative();
    const Polynomial ri = rho.antiderivative();
    const double lnorm = li(1.0);
    const double rnorm = ri(1.0);
    if (lnorm <= 0.0 || rnorm <= 0.0) throw ConfigError("degenerate degree distribution");
    d.Lp1 = 1.0 / lnorm;
    d.Rp1 = 1.0 / rnorm;
    d.L = li;
    d.L.scale(d.Lp1);
    d.R = ri;
    d.R.scale(d.Rp1);
    d.lambda = std::move(lambda);
    d.rho = std::move(rho);
    d.validate();
    return d;
}

DegreeDistribution DegreeDistribution::from_node(Polynomial L, Polynomial R) {
    DegreeDistribution d;
    Polynomial lp = L.derivative();
    Polynomial rp = R.derivative();
    d.Lp1 = lp(1.0);
    d.Rp1 = rp(1.0);
    if (d.Lp1 <= 0.0 || d.Rp1 <= 0.0) throw ConfigError("degenerate degree distribution");
    d.lambda = lp;
    d.lambda.scale(1.0 / d.Lp1);
    d.rho = rp;
    d.rho.scale(1.0 / d.Rp1);
    d.L = std::move(L);
    d.R = std::move(R);
    d.validate();
    return d;
}

DegreeDistribution DegreeDistribution::parse(std::string_view text) {
    // regular form "l,r"
    if (text.find(':') == std::string_view::npos) {
        const size_t comma = text.find(',');
        if (comma == std::string_view::npos)
            throw ConfigError("ensemble literal must be 'l,r' or 'L:<poly>;R:<poly>'");
        int l = 0, r = 0;
        try {
            l = std::stoi(std::string(text.substr(0, comma)));
            r = std::stoi(std::string(text.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ConfigError("bad regular ensemble literal '" + std::string(text) + "'");
        }
        return regular(l, r);
    }
    const size_t semi = text.find(';');
    if (semi == std::string_view::npos) throw ConfigError("node-perspective literal needs 'L:<poly>;R:<poly>'");
    auto part = [&](std::string_view s, std::string_view tag) {
        if (s.substr(0, tag.size()) != tag)
            throw ConfigError("expected '" + std::string(tag) + "' in ensemble literal");
        return Polynomial::parse(s.substr(tag.size()));
    };
    return from_node(part(text.substr(0, semi), "L:"), part(text.substr(semi + 1), "R:"));
}

void DegreeDistribution::validate(double tol) const {
    if (lambda.empty() || rho.empty()) throw ConfigError("empty degree distribution");
    if (std::abs(lambda.coeff_sum() - 1.0) > tol) throw ConfigError("lambda coefficients must sum to 1");
    if (std::abs(rho.coeff_sum() - 1.0) > tol) throw ConfigError("rho coefficients must sum to 1");
    for (double c : lambda.coeffs())
        if (c < 0.0) throw ConfigError("negative lambda coefficient");
    for (double c : rho.coeffs())
        if (c < 0.0) throw ConfigError("negative rho coefficient");
    if (lambda.coeff(0) != 0.0) throw ConfigError("degree-1 variable nodes are not supported");
    // L'(y) = L'(1) lambda(y), R'(y) = R'(1) rho(y), coefficient-wise
    const Polynomial lp = L.derivative();
    const Polynomial rp = R.derivative();
    for (int k = 0; k <= std::max(lp.degree(), lambda.degree()); ++k)
        if (std::abs(lp.coeff(k) - Lp1 * lambda.coeff(k)) > tol * std::max(1.0, Lp1))
            throw ConfigError("L'(y) != L'(1) lambda(y)");
    for (int k = 0; k <= std::max(rp.degree(), rho.degree()); ++k)
        if (std::abs(rp.coeff(k) - Rp1 * rho.coeff(k)) > tol * std::max(1.0, Rp1))
            throw ConfigError("R'(y) != R'(1) rho(y)");
}

std::string DegreeDistribution::to_string() const {
    // regular ensembles print as "l,r"
    if (lambda.coeff(lambda.degree()) == 1.0 && rho.coeff(rho.degree()) == 1.0 && lambda.coeff_sum() == 1.0 &&
        rho.coeff_sum() == 1.0) {
        std::ostringstream os;
        os << lambda.degree() + 1 << "," << rho.degree() + 1;
        return os.str();
    }
    return "L:" + L.to_string() + ";R:" + R.to_string();
}

} // namespace scwave
