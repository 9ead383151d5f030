#include "scwave/scalar_system.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "front_solver.hpp"
#include "scwave/errors.hpp"
#include "scwave/numerics.hpp"

namespace scwave {

double scalar_de_step(double x, const ScalarSystem& sys, double eps) {
    if (x < 0.0 || x > sys.x_max * (1.0 + 1e-12)) throw ConfigError("state outside [0, x_max]");
    return sys.f(sys.g(x, eps), eps);
}

double scalar_potential(double x, const ScalarSystem& sys, double eps) {
    const double gx = sys.g(x, eps);
    return x * gx - sys.G(x, eps) - sys.F(gx, eps);
}

ScalarFixedPointSet scalar_fixed_points(const ScalarSystem& sys, double eps, const IterationOptions& opts) {
    auto iterate = [&](double x0) {
        double x = x0;
        for (int t = 0; t < opts.max_iterations; ++t) {
            const double next = sys.f(sys.g(x, eps), eps);
            const double delta = std::abs(next - x);
            x = next;
            if (delta < opts.tol) break;
        }
        return x;
    };
    ScalarFixedPointSet fp;
    fp.x_good = iterate(1e-8 * sys.x_max);
    const double from_max = iterate(sys.x_max);
    if (from_max > fp.x_good + 1e-6 * sys.x_max) {
        fp.x_bad = from_max;
        const double lo = fp.x_good + 1e-9 * sys.x_max;
        const double hi = *fp.x_bad * (1.0 - 1e-9);
        auto h = [&](double x) { return sys.f(sys.g(x, eps), eps) - x; };
        if (h(lo) < 0.0 && h(hi) > 0.0) fp.x_unst = bisect(h, lo, hi, opts.bisection_steps);
    }
    return fp;
}

double scalar_energy_gap(const ScalarSystem& sys, double eps, const IterationOptions& opts) {
    const ScalarFixedPointSet fp = scalar_fixed_points(sys, eps, opts);
    if (!fp.x_bad) throw ConvergenceError("no non-trivial fixed point at this control parameter");
    return scalar_potential(*fp.x_bad, sys, eps) - scalar_potential(fp.x_good, sys, eps);
}

ScalarFixedPoints scalar_thresholds(const ScalarSystem& sys, const IterationOptions& opts) {
    // "decodes" means both initializations meet at a low fixed point; the
    // 0.25 x_max guard rejects the monostable-bad phase where even the 0+
    // iteration climbs to x_bad (compressive sensing at very small delta)
    auto reaches_good = [&](double eps) {
        const ScalarFixedPointSet fp = scalar_fixed_points(sys, eps, opts);
        return !fp.x_bad.has_value() && fp.x_good < 0.25 * sys.x_max;
    };
    const double lo_probe = 1e-3 * sys.eps_max;
    ScalarFixedPoints out;
    if (reaches_good(lo_probe) == reaches_good(sys.eps_max))
        throw ConvergenceError("control-parameter range shows no algorithmic transition");
    out.eps_a = bisect_predicate(reaches_good, lo_probe, sys.eps_max, opts.bisection_steps);

    // signed gap; a probe without two distinct fixed points counts as the
    // good phase unless even the 0+ iteration climbed high (monostable bad)
    auto gap = [&](double eps) {
        try {
            return scalar_energy_gap(sys, eps, opts);
        } catch (const ConvergenceError&) {
            const ScalarFixedPointSet fp = scalar_fixed_points(sys, eps, opts);
            return fp.x_good < 0.25 * sys.x_max ? 1.0 : -1.0;
        }
    };
    if (sys.control_decreasing) {
        double lo = out.eps_a * 0.5;
        while (gap(lo) > 0.0) {
            lo *= 0.5;
            if (lo < 1e-9 * sys.eps_max) throw ConvergenceError("energy gap never becomes negative");
        }
        out.eps_pot = bisect(gap, lo, out.eps_a * (1.0 - 1e-7), opts.bisection_steps);
    } else {
        if (gap(sys.eps_max) >= 0.0) {
            out.eps_pot = sys.eps_max;
        } else {
            out.eps_pot = bisect(gap, out.eps_a * (1.0 + 1e-7), sys.eps_max, opts.bisection_steps);
        }
    }
    const ScalarFixedPointSet at_pot = scalar_fixed_points(sys, out.eps_pot, opts);
    out.x_good = at_pot.x_good;
    out.x_unst = at_pot.x_unst;
    out.x_bad = at_pot.x_bad;
    return out;
}

SolitonSolution scalar_soliton(const ScalarSystem& sys, double eps, const SolitonGrid& grid,
                               const SolitonOptions& opts) {
    const IterationOptions iter;
    const ScalarFixedPointSet fp = scalar_fixed_points(sys, eps, iter);
    if (!fp.x_bad) throw ConfigError("control parameter outside the bistable range: no front to track");
    const double delta_e = scalar_potential(*fp.x_bad, sys, eps) - scalar_potential(fp.x_good, sys, eps);
    if (delta_e < -1e-9) throw ConfigError("negative energy gap: the front would move backwards");
    const double gap = std::max(delta_e, 0.0);

    detail::FrontProblem problem;
    problem.label = "scalar soliton";
    problem.x_left = fp.x_good;
    problem.x_right = *fp.x_bad;
    problem.rhs = [&sys, eps, &grid](const std::vector<double>& shape, std::vector<double>& out) {
        std::vector<double> gv(shape.size());
        for (size_t i = 0; i < shape.size(); ++i) gv[i] = sys.g(shape[i], eps);
        std::vector<double> inner;
        detail::window_forward(gv, inner, grid.per_window);
        for (double& v : inner) v = sys.f(v, eps);
        detail::window_backward(inner, out, grid.per_window);
    };
    problem.velocity = [&sys, eps, gap, &grid](const std::vector<double>& shape,
                                               const std::vector<double>& deriv) -> detail::VelocityEstimate {
        std::vector<double> integrand(shape.size());
        for (size_t i = 0; i < shape.size(); ++i)
            integrand[i] = sys.g_prime(shape[i], eps) * deriv[i] * deriv[i];
        const double denom = trapezoid(integrand, grid.hz());
        if (denom <= 0.0) throw ConvergenceError("vanishing denominator in the scalar velocity formula");
        return {gap / denom, denom};
    };
    SolitonSolution sol = detail::solve_front(problem, grid, opts);
    sol.delta_e = gap;
    return sol;
}

void scalar_coupled_step(ScalarProfile& p, const ScalarSystem& sys, double eps) {
    const int n = p.size();
    const int w = p.w;
    std::vector<double> gv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) gv[static_cast<size_t>(i)] = sys.g(p.values[static_cast<size_t>(i)], eps);
    std::vector<double> gavg(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < w; ++k) acc += gv[static_cast<size_t>(std::min(i + k, n - 1))];
        gavg[static_cast<size_t>(i)] = acc / w;
    }
    std::vector<double> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < w; ++j) acc += sys.f(gavg[static_cast<size_t>(std::max(i - j, 0))], eps);
        next[static_cast<size_t>(i)] = acc / w;
    }
    p.values = std::move(next);
    p.pin_seed();
    ++p.t;
}

double coupled_potential_scalar(const ScalarProfile& p, const ScalarSystem& sys, double eps) {
    const int n = p.size();
    const int w = p.w;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = p.values[static_cast<size_t>(i)];
        total += x * sys.g(x, eps) - sys.G(x, eps);
        double acc = 0.0;
        for (int k = 0; k < w; ++k) acc += sys.g(p.at_clamped(i + k), eps);
        total -= sys.F(acc / w, eps);
    }
    return total;
}

// ---- LDPC / BEC instance ----

ScalarSystem bec_scalar_system(const DegreeDistribution& d) {
    ScalarSystem sys;
    sys.label = "bec";
    const Polynomial rho_prime = d.rho.derivative();
    sys.f = [d](double y, double eps) { return eps * d.lambda(y); };
    sys.g = [d](double x, double) { return 1.0 - d.rho(1.0 - x); };
    sys.g_prime = [rho_prime](double x, double) { return rho_prime(1.0 - x); };
    sys.G = [d](double x, double) { return x - (1.0 - d.R(1.0 - x)) / d.Rp1; };
    sys.F = [d](double y, double eps) { return eps * d.L(y) / d.Lp1; };
    sys.x_max = 1.0;
    sys.eps_max = 1.0;
    return sys;
}

// ---- GLDPC ----

double gldpc_g_binomial_sum(int n, int e, double x) {
    // sum_{i=e}^{n-1} C(n-1,i) x^i (1-x)^{n-1-i}
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double coeff = 1.0;
    double sum = 0.0;
    const int trials = n - 1;
    for (int i = 1; i <= trials; ++i) {
        coeff = coeff * (trials - i + 1) / i;
        if (i >= e) sum += coeff * std::pow(x, i) * std::pow(1.0 - x, trials - i);
    }
    if (e == 0) sum += std::pow(1.0 - x, trials);
    return sum;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    // Lentz continued fraction for I_x(a,b)
    auto betacf = [](double a, double b, double x) {
        const double tiny = 1e-300;
        const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
        double c = 1.0;
        double d = 1.0 - qab * x / qap;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= 300; ++m) {
            const int m2 = 2 * m;
            double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
            d = 1.0 + aa * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + aa / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            h *= d * c;
            aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
            d = 1.0 + aa * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + aa / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-15) break;
        }
        return h;
    };
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double gldpc_g(int n, int e, double x) {
    if (n <= 30) return gldpc_g_binomial_sum(n, e, x);
    return regularized_incomplete_beta(e, n - e, x);
}

double gldpc_g_prime(int n, int e, double x) {
    // beta density x^{e-1}(1-x)^{n-e-1} / B(e, n-e)
    const double ln_b = std::lgamma(e) + std::lgamma(n - e) - std::lgamma(n);
    if (x <= 0.0 || x >= 1.0) return e == 1 ? std::exp(-ln_b) : 0.0;
    return std::exp((e - 1) * std::log(x) + (n - e - 1) * std::log1p(-x) - ln_b);
}

ScalarSystem gldpc_system(int n, int e) {
    if (e < 2) throw ConfigError("gldpc needs e >= 2 (the potential is singular at x = 0 for e < 2)");
    if (e >= n) throw ConfigError("gldpc needs e < n");
    ScalarSystem sys;
    sys.label = "gldpc";
    sys.f = [](double y, double eps) { return eps * y; };
    sys.g = [n, e](double x, double) { return gldpc_g(n, e, x); };
    sys.g_prime = [n, e](double x, double) { return gldpc_g_prime(n, e, x); };
    // integration by parts: G(x) = x g(x) - (e/n) I_x(e+1, n-e)
    sys.G = [n, e](double x, double) {
        const double tail = n <= 30 ? gldpc_g_binomial_sum(n + 1, e + 1, x) : regularized_incomplete_beta(e + 1, n - e, x);
        return x * gldpc_g(n, e, x) - static_cast<double>(e) / n * tail;
    };
    sys.F = [](double y, double eps) { return 0.5 * eps * y * y; };
    sys.x_max = 1.0;
    sys.eps_max = 1.0;
    return sys;
}

// ---- compressive sensing ----

namespace {

double gaussian_pdf(double y, double var) {
    return std::exp(-y * y / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

std::vector<double> mixture_breakpoints(double sigma1) {
    std::vector<double> pts = {-12.0 * sigma1, -50.0, -8.0, 0.0, 8.0, 50.0, 12.0 * sigma1};
    std::erase_if(pts, [&](double p) { return std::abs(p) > 12.0 * sigma1 + 1e-9; });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

// Prior (1-rho) delta_0 + rho N(0,1): the unit-variance non-zero component
// matches the published phase-transition values; E[S^2] = rho.
double mmse_bernoulli_gaussian(double s, double rho) {
    if (s < 0.0) throw ConfigError("mmse needs snr >= 0");
    if (rho <= 0.0 || rho > 1.0) throw ConfigError("sparsity must lie in (0,1]");
    if (s == 0.0) return rho;
    const double var1 = 1.0 + s;
    const double sigma1 = std::sqrt(var1);
    const double shrink = s / (var1 * var1);
    auto integrand = [&](double y) {
        const double p1 = rho * gaussian_pdf(y, var1);
        const double q = (1.0 - rho) * gaussian_pdf(y, 1.0) + p1;
        if (q <= 0.0) return 0.0;
        return p1 * p1 * y * y / q;
    };
    const auto pts = mixture_breakpoints(sigma1);
    const double estimate_power = shrink * integrate_adaptive(integrand, pts, 1e-12);
    return rho - estimate_power;
}

double mutual_info_bernoulli_gaussian(double s, double rho) {
    if (s < 0.0) throw ConfigError("mutual information needs snr >= 0");
    if (rho <= 0.0 || rho > 1.0) throw ConfigError("sparsity must lie in (0,1]");
    if (s == 0.0) return 0.0;
    const double var1 = 1.0 + s;
    auto neg_qlnq = [&](double y) {
        const double q = (1.0 - rho) * gaussian_pdf(y, 1.0) + rho * gaussian_pdf(y, var1);
        if (q <= 1e-300) return 0.0;
        return -q * std::log(q);
    };
    const auto pts = mixture_breakpoints(std::sqrt(var1));
    const double h_y = integrate_adaptive(neg_qlnq, pts, 1e-12);
    const double h_z = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e);
    return h_y - h_z;
}

ScalarSystem cs_system(double rho, double snr) {
    if (snr <= 0.0) throw ConfigError("cs needs snr > 0");
    // cached monotone mmse(s) on t = log1p(s); hot loops stay cheap while
    // potentials keep the exact quadrature path
    const int samples = 1200;
    std::vector<double> ts(samples), ms(samples);
    const double t_hi = std::log1p(snr);
    for (int i = 0; i < samples; ++i) {
        ts[static_cast<size_t>(i)] = t_hi * i / (samples - 1);
        ms[static_cast<size_t>(i)] = mmse_bernoulli_gaussian(std::expm1(ts[static_cast<size_t>(i)]), rho);
    }
    auto mmse_table = std::make_shared<MonotoneCubic>(std::move(ts), std::move(ms));
    const double i_snr = mutual_info_bernoulli_gaussian(snr, rho);

    ScalarSystem sys;
    sys.label = "cs";
    sys.f = [mmse_table, snr](double y, double) { return (*mmse_table)(std::log1p(snr - y)); };
    sys.g = [snr](double x, double delta) { return snr - 1.0 / (1.0 / snr + x / delta); };
    sys.g_prime = [snr](double x, double delta) {
        const double eff = 1.0 / (1.0 / snr + x / delta);
        return eff * eff / delta;
    };
    sys.G = [snr](double x, double delta) { return snr * x - delta * std::log1p(x * snr / delta); };
    sys.F = [rho, snr, i_snr](double y, double) {
        return 2.0 * (i_snr - mutual_info_bernoulli_gaussian(snr - y, rho));
    };
    sys.x_max = rho; // mmse(0) = E[S^2] = rho
    sys.eps_max = 1.0;
    sys.control_decreasing = true;
    return sys;
}

double cs_potential(double x, double delta, double rho, double snr) {
    // the closed four-term display; agrees with the generic x g - G - F(g)
    const double inv_eff = 1.0 / snr + x / delta;
    const double snr_eff = 1.0 / inv_eff;
    return -x / inv_eff + delta * std::log1p(x * snr / delta) - 2.0 * mutual_info_bernoulli_gaussian(snr, rho) +
           2.0 * mutual_info_bernoulli_gaussian(snr_eff, rho);
}

} // namespace scwave
