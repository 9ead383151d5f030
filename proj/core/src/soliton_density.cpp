#include "scwave/soliton_density.hpp"

#include <cmath>

#include "front_solver.hpp"
#include "scwave/errors.hpp"
#include "scwave/numerics.hpp"

namespace scwave {

namespace {

// cn powers x^{cn 0..max_power}; power 0 is the identity dirac_infinity
std::vector<Density> cn_powers(const Density& x, int max_power) {
    std::vector<Density> powers;
    powers.reserve(static_cast<size_t>(max_power) + 1);
    powers.push_back(dirac_infinity(x.grid_ptr()));
    for (int k = 1; k <= max_power; ++k) powers.push_back(cn_convolve(powers.back(), x));
    return powers;
}

Density lift_from_powers(const Polynomial& poly, const std::vector<Density>& powers,
                         const std::shared_ptr<const Grid>& grid, bool is_signed) {
    Density out(grid, is_signed);
    for (int k = 0; k <= poly.degree(); ++k) {
        const double c = poly.coeff(k);
        if (c != 0.0) out.axpy(c, powers[static_cast<size_t>(k)]);
    }
    return out;
}

// trapezoid window combination of densities, forward (+) or backward (-)
Density window_combine(const std::vector<Density>& states, int i, int K, int direction,
                       const std::shared_ptr<const Grid>& grid) {
    const int n = static_cast<int>(states.size());
    auto clamp_at = [&](int k) -> const Density& {
        if (k < 0) k = 0;
        if (k >= n) k = n - 1;
        return states[static_cast<size_t>(k)];
    };
    Density acc(grid);
    acc.axpy(0.5 / K, clamp_at(i));
    acc.axpy(0.5 / K, clamp_at(i + direction * K));
    for (int k = 1; k < K; ++k) acc.axpy(1.0 / K, clamp_at(i + direction * k));
    return acc;
}

struct DenominatorParts {
    double integral = 0.0; // int H(rho'^cn(X) cn X'^{cn 2}) dz, negative for fronts
};

DenominatorParts density_denominator(const std::vector<Density>& shape, const DegreeDistribution& d,
                                     const SolitonGrid& grid) {
    const auto gptr = shape.front().grid_ptr();
    const Polynomial rho_prime = d.rho.derivative();
    const int n = static_cast<int>(shape.size());
    const double hz = grid.hz();
    std::vector<double> integrand(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const Density& lo = shape[static_cast<size_t>(i == 0 ? 0 : i - 1)];
        const Density& hi = shape[static_cast<size_t>(i == n - 1 ? n - 1 : i + 1)];
        const double span = (i == 0 || i == n - 1) ? hz : 2.0 * hz;
        Density deriv = hi - lo;
        deriv.scale(1.0 / span);
        const Density deriv2 = cn_convolve(deriv, deriv);
        const std::vector<Density> powers = cn_powers(shape[static_cast<size_t>(i)], rho_prime.degree());
        const Density lifted = lift_from_powers(rho_prime, powers, gptr, false);
        integrand[static_cast<size_t>(i)] = entropy(cn_convolve(lifted, deriv2));
    }
    return {trapezoid(integrand, hz)};
}

} // namespace

double velocity_general_bms(const std::vector<Density>& shape, const Density& channel, const DegreeDistribution& d,
                            const SolitonGrid& grid) {
    if (static_cast<int>(shape.size()) != grid.points()) throw ConfigError("shape not aligned to the soliton grid");
    const IterationOptions opts;
    const Density x_bad = de_fixed_point_density(channel, d, dirac_zero(channel.grid_ptr()), opts);
    if (entropy(x_bad) < opts.zero_threshold) throw ConfigError("no non-trivial fixed point for this channel");
    const double delta_e = potential_single(x_bad, channel, d);
    const double integral = density_denominator(shape, d, grid).integral;
    if (integral >= 0.0) throw ConvergenceError("vanishing denominator in the BMS velocity formula");
    return delta_e / (-integral);
}

DensitySolitonSolution solve_soliton_general(const Density& channel, const DegreeDistribution& d,
                                             const SolitonGrid& grid, const DensitySolitonOptions& opts) {
    const auto gptr = channel.grid_ptr();
    const int n = grid.points();
    if (static_cast<long>(n) * gptr->node_count() > opts.max_state_doubles)
        throw ConfigError("soliton grid x density grid exceeds the configured memory budget");

    const IterationOptions iter;
    const Density x_bad = de_fixed_point_density(channel, d, dirac_zero(gptr), iter);
    const double p_bad = entropy(x_bad);
    if (p_bad < iter.zero_threshold) throw ConfigError("channel below the BP threshold: no front to track");
    const double delta_e = potential_single(x_bad, channel, d);
    if (delta_e < -1e-9) throw ConfigError("channel above the MAP threshold: negative energy gap");
    const double gap = std::max(delta_e, 0.0);

    const Density left = dirac_infinity(gptr);
    DensitySolitonSolution sol;
    sol.delta_e = gap;
    sol.z.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sol.z[static_cast<size_t>(i)] = grid.z(i);

    // erf ramp between dirac_infinity and the bad fixed point
    std::vector<Density> shape;
    shape.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = 0.5 * (1.0 + std::erf(grid.z(i)));
        Density s(gptr);
        s.axpy(1.0 - t, left);
        s.axpy(t, x_bad);
        shape.push_back(std::move(s));
    }

    const int K = grid.per_window;
    const double level = 0.5 * p_bad;
    const Polynomial rho_prime = d.rho.derivative();
    const int max_pow = std::max(d.rho.degree(), rho_prime.degree());

    double v_prev = 0.0;
    double sup_change = 0.0;
    double v = 0.0;
    double denom = 0.0;
    int sweep = 0;
    bool converged = false;

    for (; sweep < opts.max_sweeps; ++sweep) {
        // check-node stage and its window average
        std::vector<Density> rho_x;
        rho_x.reserve(static_cast<size_t>(n));
        std::vector<double> denom_integrand(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            const std::vector<Density> powers = cn_powers(shape[static_cast<size_t>(i)], max_pow);
            rho_x.push_back(lift_from_powers(d.rho, powers, gptr, false));
            // velocity denominator shares the cn powers
            const Density& lo = shape[static_cast<size_t>(i == 0 ? 0 : i - 1)];
            const Density& hi = shape[static_cast<size_t>(i == n - 1 ? n - 1 : i + 1)];
            const double span = (i == 0 || i == n - 1) ? grid.hz() : 2.0 * grid.hz();
            Density deriv = hi - lo;
            deriv.scale(1.0 / span);
            const Density lifted = lift_from_powers(rho_prime, powers, gptr, false);
            denom_integrand[static_cast<size_t>(i)] = entropy(cn_convolve(lifted, cn_convolve(deriv, deriv)));
        }
        const double integral = trapezoid(denom_integrand, grid.hz());
        if (integral >= 0.0) throw ConvergenceError("vanishing denominator in the BMS velocity formula");
        denom = -integral;
        v = gap / denom;

        std::vector<Density> next(static_cast<size_t>(n), Density(gptr));
        std::vector<Density> inner(static_cast<size_t>(n), Density(gptr));
        for (int i = 0; i < n; ++i) {
            Density win = window_combine(rho_x, i, K, +1, gptr);
            inner[static_cast<size_t>(i)] = vn_convolve(channel, poly_lift_vn(d.lambda, win));
        }
        sup_change = 0.0;
        for (int i = 0; i < n; ++i) {
            Density rhs = window_combine(inner, i, K, -1, gptr);
            // X <- (1-theta) X + theta (rhs + v X')
            const Density& lo = shape[static_cast<size_t>(i == 0 ? 0 : i - 1)];
            const Density& hi = shape[static_cast<size_t>(i == n - 1 ? n - 1 : i + 1)];
            const double span = (i == 0 || i == n - 1) ? grid.hz() : 2.0 * grid.hz();
            Density upd(gptr);
            upd.axpy(1.0 - opts.damping, shape[static_cast<size_t>(i)]);
            upd.axpy(opts.damping, rhs);
            upd.axpy(opts.damping * v / span, hi);
            upd.axpy(-opts.damping * v / span, lo);
            next[static_cast<size_t>(i)] = std::move(upd);
        }
        next.front() = left;
        next.back() = x_bad;

        // recentre on the entropy observable
        std::vector<double> h(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)] = entropy(next[static_cast<size_t>(i)]);
        double z_cross = 0.0;
        bool found = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (h[static_cast<size_t>(i)] < level && h[static_cast<size_t>(i + 1)] >= level) {
                const double frac =
                    (level - h[static_cast<size_t>(i)]) / (h[static_cast<size_t>(i + 1)] - h[static_cast<size_t>(i)]);
                z_cross = grid.z(i) + frac * grid.hz();
                found = true;
                break;
            }
        }
        if (found && std::abs(z_cross) > 1e-15) {
            std::vector<Density> shifted(static_cast<size_t>(n), Density(gptr));
            for (int i = 0; i < n; ++i) {
                const double pos = (grid.z(i) + z_cross - grid.z_min) / grid.hz();
                if (pos <= 0.0) {
                    shifted[static_cast<size_t>(i)] = left;
                } else if (pos >= n - 1) {
                    shifted[static_cast<size_t>(i)] = x_bad;
                } else {
                    const int k = static_cast<int>(pos);
                    const double frac = pos - k;
                    Density mix(gptr);
                    mix.axpy(1.0 - frac, next[static_cast<size_t>(k)]);
                    mix.axpy(frac, next[static_cast<size_t>(k + 1)]);
                    shifted[static_cast<size_t>(i)] = std::move(mix);
                }
            }
            next = std::move(shifted);
        }

        sup_change = 0.0;
        for (int i = 0; i < n; ++i)
            sup_change = std::max(sup_change,
                                  std::abs(entropy(next[static_cast<size_t>(i)]) - entropy(shape[static_cast<size_t>(i)])));
        const double dv = std::abs(v - v_prev) / std::max(std::abs(v), 1e-12);
        shape = std::move(next);
        v_prev = v;
        if (sup_change < opts.shape_tol && dv < opts.velocity_tol) {
            converged = true;
            ++sweep;
            break;
        }
    }

    sol.velocity = v;
    sol.denominator = denom;
    sol.residual = sup_change;
    sol.iterations = sweep;
    sol.converged = converged;
    sol.entropy_shape.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) sol.entropy_shape[static_cast<size_t>(i)] = entropy(shape[static_cast<size_t>(i)]);
    sol.shape = std::move(shape);
    if (!converged && opts.throw_on_nonconvergence)
        throw ConvergenceError("density soliton solver did not converge");
    return sol;
}

} // namespace scwave
