#include "scwave/gaussian.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>

#include "front_solver.hpp"
#include "scwave/errors.hpp"
#include "scwave/numerics.hpp"

namespace scwave {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kSeriesCut = 1e-6;
constexpr int kQuadNodes = 4001;

double softplus(double t) { return t > 40.0 ? t : std::log1p(std::exp(t)); }

// integrand weights: log2(1 + e^{-z}) against the Gaussian kernel of mean m,
// variance 2m; `order` selects the analytic d/dm factor.
double quad_kernel(double z, double m, int order) {
    const double r = z - m;
    const double base = std::exp(-r * r / (4.0 * m)) * softplus(-z) / kLn2;
    if (order == 0) return base;
    const double u = -0.5 / m + r / (2.0 * m) + r * r / (4.0 * m * m);
    if (order == 1) return base * u;
    const double du = 0.5 / (m * m) - z / (2.0 * m * m) - z * r / (2.0 * m * m * m);
    return base * (u * u + du);
}

double psi_quadrature(double m, int order) {
    if (std::isinf(m)) return 0.0;
    const double sigma = std::sqrt(2.0 * m);
    const double lo = m - 12.0 * sigma;
    const double hi = m + 12.0 * sigma;
    const double h = (hi - lo) / (kQuadNodes - 1);
    double sum = 0.5 * (quad_kernel(lo, m, order) + quad_kernel(hi, m, order));
    for (int i = 1; i < kQuadNodes - 1; ++i) sum += quad_kernel(lo + i * h, m, order);
    return sum * h / std::sqrt(4.0 * std::numbers::pi * m);
}

double psi_series(double m, int order) {
    switch (order) {
    case 0: return 1.0 - m / (4.0 * kLn2) + m * m / (16.0 * kLn2);
    case 1: return -1.0 / (4.0 * kLn2) + m / (8.0 * kLn2);
    default: return 1.0 / (8.0 * kLn2);
    }
}

} // namespace

struct Psi::Table {
    std::vector<double> means;
    std::vector<double> values;
    MonotoneCubic value;   // log m -> psi
    MonotoneCubic deriv;   // log m -> psi'
    MonotoneCubic second;  // log m -> psi''
    MonotoneCubic inverse; // log psi -> m
};

const Psi::Table& Psi::table() const {
    std::call_once(once_, [this] {
        auto t = std::make_shared<Table>();
        const int n = 2800;
        const double lo = std::log(1e-8);
        const double hi = std::log(inverse_cap());
        std::vector<double> logm(n), v(n), d1(n), d2(n);
        t->means.resize(n);
        for (int i = 0; i < n; ++i) {
            logm[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
            const double m = std::exp(logm[static_cast<size_t>(i)]);
            t->means[static_cast<size_t>(i)] = m;
            v[static_cast<size_t>(i)] = m < kSeriesCut ? psi_series(m, 0) : psi_quadrature(m, 0);
            d1[static_cast<size_t>(i)] = m < kSeriesCut ? psi_series(m, 1) : psi_quadrature(m, 1);
            d2[static_cast<size_t>(i)] = m < kSeriesCut ? psi_series(m, 2) : psi_quadrature(m, 2);
        }
        t->values = v;
        t->value = MonotoneCubic(logm, v);
        t->deriv = MonotoneCubic(logm, d1);
        t->second = MonotoneCubic(logm, d2);
        // inverse table on log psi (psi is strictly decreasing in m)
        std::vector<double> logp(v.size()), mm(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            logp[v.size() - 1 - i] = std::log(v[i]);
            mm[v.size() - 1 - i] = t->means[i];
        }
        t->inverse = MonotoneCubic(std::move(logp), std::move(mm));
        table_ = std::move(t);
    });
    return *table_;
}

const Psi& Psi::instance() {
    static const Psi psi;
    return psi;
}

double Psi::value(double m) const {
    if (m < 0.0) throw ConfigError("psi needs m >= 0");
    if (m == 0.0) return 1.0;
    if (m < kSeriesCut) return psi_series(m, 0);
    return psi_quadrature(m, 0);
}

double Psi::derivative(double m) const {
    if (m < 0.0) throw ConfigError("psi needs m >= 0");
    if (m < kSeriesCut) return psi_series(m, 1);
    return psi_quadrature(m, 1);
}

double Psi::second_derivative(double m) const {
    if (m < 0.0) throw ConfigError("psi needs m >= 0");
    if (m < kSeriesCut) return psi_series(m, 2);
    return psi_quadrature(m, 2);
}

double Psi::inverse(double p) const {
    if (p <= 0.0 || p > 1.0) throw ConfigError("psi_inv needs p in (0, 1]");
    if (p == 1.0) return 0.0;
    if (1.0 - p < 1e-9) return 4.0 * kLn2 * (1.0 - p); // leading series term
    const Table& t = table();
    if (p <= t.values.back()) {
        static std::once_flag warned;
        std::call_once(warned, [] { std::cerr << "psi_inv: entropy below table range, clamping mean to 500\n"; });
        return inverse_cap();
    }
    double m = std::max(t.inverse(std::log(p)), 1e-12);
    // Newton against the exact quadrature
    for (int it = 0; it < 60; ++it) {
        const double f = value(m) - p;
        const double df = derivative(m);
        double step = f / df;
        double next = m - step;
        if (next <= 0.0) next = 0.5 * m;
        const bool done = std::abs(next - m) < 1e-12 * std::max(1.0, std::abs(m));
        m = next;
        if (done) break;
    }
    return m;
}

double Psi::value_fast(double m) const {
    if (std::isinf(m)) return 0.0;
    if (m < kSeriesCut) return psi_series(m, 0);
    const Table& t = table();
    if (m >= inverse_cap()) return t.values.back();
    return t.value(std::log(m));
}

double Psi::derivative_fast(double m) const {
    if (std::isinf(m)) return 0.0;
    if (m < kSeriesCut) return psi_series(m, 1);
    return table().deriv(std::log(std::min(m, inverse_cap())));
}

double Psi::second_derivative_fast(double m) const {
    if (std::isinf(m)) return 0.0;
    if (m < kSeriesCut) return psi_series(m, 2);
    return table().second(std::log(std::min(m, inverse_cap())));
}

double Psi::inverse_fast(double p) const {
    if (p >= 1.0) return 0.0;
    if (1.0 - p < 1e-9) return 4.0 * kLn2 * (1.0 - p);
    const Table& t = table();
    if (p <= t.values.back()) return inverse_cap();
    double m = std::max(t.inverse(std::log(p)), 1e-12);
    // one Newton step on the interpolated tables tightens the round trip
    const double f = value_fast(m) - p;
    const double df = derivative_fast(m);
    if (df != 0.0) {
        const double next = m - f / df;
        if (next > 0.0 && next < inverse_cap()) m = next;
    }
    return m;
}

const std::vector<double>& Psi::table_means() const { return table().means; }
const std::vector<double>& Psi::table_values() const { return table().values; }

double psi(double m) { return Psi::instance().value(m); }
double psi_inv(double p) { return Psi::instance().inverse(p); }
double psi_prime(double m) { return Psi::instance().derivative(m); }
double psi_second(double m) { return Psi::instance().second_derivative(m); }

namespace {

// extended conventions: psiinv(0) = +inf, psi(+inf) = 0
double inv_ext_fast(double p) {
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    return Psi::instance().inverse_fast(p);
}

double inv_ext_exact(double p) {
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    if (p > 1.0) return 0.0;
    return Psi::instance().inverse(p);
}

} // namespace

double ga_vn_entropy(double p1, double p2) {
    const auto& psi = Psi::instance();
    return psi.value_fast(inv_ext_fast(p1) + inv_ext_fast(p2));
}

double ga_cn_entropy(double p1, double p2) {
    const auto& psi = Psi::instance();
    return 1.0 - psi.value_fast(inv_ext_fast(1.0 - p1) + inv_ext_fast(1.0 - p2));
}

double ga_de_step(double p, double channel_mean, int l, int r) {
    const auto& psi = Psi::instance();
    const double a = inv_ext_fast(1.0 - p);
    const double q = 1.0 - psi.value_fast((r - 1) * a);
    const double b = inv_ext_fast(q);
    if (std::isinf(b)) return 0.0;
    return psi.value_fast(channel_mean + (l - 1) * b);
}

double ga_fixed_point_from(double p0, double channel_mean, int l, int r, const IterationOptions& opts, int* iters) {
    double p = p0;
    int t = 0;
    for (; t < opts.max_iterations; ++t) {
        const double next = ga_de_step(p, channel_mean, l, r);
        const double delta = std::abs(next - p);
        p = next;
        if (delta < opts.tol) break;
    }
    if (iters) *iters = t;
    return p;
}

namespace {

double ga_potential_raw(double p, double channel_mean, int l, int r) {
    const auto& psi = Psi::instance();
    const double a = inv_ext_exact(1.0 - p);
    const double psi_ra = psi.value(r * a);
    const double psi_r1a = psi.value((r - 1) * a);
    const double q = 1.0 - psi_r1a;
    const double b = inv_ext_exact(q);
    const double t4 = std::isinf(b) ? 0.0 : psi.value(channel_mean + l * b) / l;
    return (1.0 - psi_ra) / r + psi_ra - psi_r1a - t4;
}

} // namespace

double ga_potential_offset(double channel_mean, int l, int r) { return ga_potential_raw(0.0, channel_mean, l, r); }

double ga_potential(double p, double channel_mean, int l, int r) {
    if (p < 0.0 || p > 1.0) throw ConfigError("GA entropy outside [0,1]");
    return ga_potential_raw(p, channel_mean, l, r) - ga_potential_raw(0.0, channel_mean, l, r);
}

double ga_energy_gap(double channel_mean, int l, int r, const IterationOptions& opts) {
    const double p_bad = ga_fixed_point_from(1.0, channel_mean, l, r, opts);
    if (p_bad < opts.zero_threshold) throw ConvergenceError("no non-trivial GA fixed point at this channel mean");
    return ga_potential(p_bad, channel_mean, l, r);
}

GaThresholds ga_thresholds(int l, int r, const IterationOptions& opts) {
    auto decodes = [&](double m) {
        double p = 1.0;
        for (int t = 0; t < opts.max_iterations; ++t) {
            const double next = ga_de_step(p, m, l, r);
            if (next < opts.zero_threshold) return true;
            if (std::abs(next - p) < opts.tol) return false;
            p = next;
        }
        return false;
    };
    double hi = 4.0;
    while (!decodes(hi)) {
        hi *= 2.0;
        if (hi > 4096.0) throw ConvergenceError("GA recursion does not decode at any channel mean");
    }
    GaThresholds th;
    th.m_bp = bisect_predicate(decodes, 0.05, hi, opts.bisection_steps);

    auto gap = [&](double m) { return ga_energy_gap(m, l, r, opts); };
    double lo = th.m_bp * 0.5;
    while (gap(lo) > 0.0) {
        lo *= 0.5;
        if (lo < 1e-4) throw ConvergenceError("GA energy gap never becomes negative");
    }
    th.m_map = bisect(gap, lo, th.m_bp * (1.0 - 1e-9), opts.bisection_steps);
    th.h_bp = Psi::instance().value(th.m_bp);
    th.h_map = Psi::instance().value(th.m_map);
    return th;
}

void ga_coupled_step(ScalarProfile& p, double channel_mean, int l, int r) {
    const auto& psi = Psi::instance();
    const int n = p.size();
    const int w = p.w;

    // check stage: q_z = 1 - psi((r-1) psiinv(1 - p_z)), then window average
    std::vector<double> q(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        q[static_cast<size_t>(i)] = 1.0 - psi.value_fast((r - 1) * inv_ext_fast(1.0 - p.values[static_cast<size_t>(i)]));
    std::vector<double> qavg(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < w; ++j) acc += q[static_cast<size_t>(std::min(i + j, n - 1))];
        qavg[static_cast<size_t>(i)] = acc / w;
    }
    // variable stage at every position, then the outgoing window average
    std::vector<double> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double b = inv_ext_fast(qavg[static_cast<size_t>(i)]);
        c[static_cast<size_t>(i)] = std::isinf(b) ? 0.0 : psi.value_fast(channel_mean + (l - 1) * b);
    }
    std::vector<double> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < w; ++j) {
            const int k = i - j;
            if (k < p.seed_count) continue; // perfect channel on the seed block
            acc += c[static_cast<size_t>(std::min(k, n - 1))];
        }
        next[static_cast<size_t>(i)] = acc / w;
    }
    p.values = std::move(next);
    p.pin_seed();
    ++p.t;
}

namespace {

double ga_denominator(const std::vector<double>& shape, const std::vector<double>& deriv, int r, double hz,
                      bool exact) {
    const auto& psi = Psi::instance();
    std::vector<double> integrand(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
        const double a = exact ? inv_ext_exact(1.0 - shape[i]) : inv_ext_fast(1.0 - shape[i]);
        const double d2 = exact ? psi.second_derivative((r - 2) * a) : psi.second_derivative_fast((r - 2) * a);
        const double d1 = exact ? psi.derivative(a) : psi.derivative_fast(a);
        integrand[i] = deriv[i] * deriv[i] * d2 / (d1 * d1);
    }
    return (r - 1) * trapezoid(integrand, hz);
}

void ga_rhs(const std::vector<double>& shape, std::vector<double>& out, double channel_mean, int l, int r, int K) {
    const auto& psi = Psi::instance();
    std::vector<double> g(shape.size());
    for (size_t i = 0; i < shape.size(); ++i)
        g[i] = psi.value_fast((r - 1) * inv_ext_fast(1.0 - shape[i]));
    std::vector<double> gwin;
    detail::window_forward(g, gwin, K);
    std::vector<double> h(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
        const double b = inv_ext_fast(1.0 - gwin[i]);
        h[i] = std::isinf(b) ? 0.0 : psi.value_fast(channel_mean + (l - 1) * b);
    }
    detail::window_backward(h, out, K);
}

} // namespace

double ga_velocity(const std::vector<double>& shape, double channel_mean, int l, int r, const SolitonGrid& grid) {
    if (static_cast<int>(shape.size()) != grid.points()) throw ConfigError("shape not aligned to the soliton grid");
    const double delta_e = ga_energy_gap(channel_mean, l, r);
    const std::vector<double> deriv = detail::central_diff(shape, grid.hz());
    const double denom = ga_denominator(shape, deriv, r, grid.hz(), true);
    if (denom <= 0.0) throw ConvergenceError("vanishing denominator in the GA velocity formula");
    return delta_e / denom;
}

SolitonSolution solve_soliton_ga(double channel_mean, int l, int r, const SolitonGrid& grid,
                                 const SolitonOptions& opts) {
    const IterationOptions iter;
    const double p_bad = ga_fixed_point_from(1.0, channel_mean, l, r, iter);
    if (p_bad < iter.zero_threshold)
        throw ConfigError("channel mean is above the GA-BP threshold: no non-trivial fixed point");
    const double delta_e = ga_potential(p_bad, channel_mean, l, r);
    if (delta_e < -1e-9) throw ConfigError("channel mean is below the GA-MAP threshold: negative energy gap");

    detail::FrontProblem problem;
    problem.label = "ga soliton";
    problem.x_left = 0.0;
    problem.x_right = p_bad;
    problem.rhs = [&, channel_mean, l, r](const std::vector<double>& shape, std::vector<double>& out) {
        ga_rhs(shape, out, channel_mean, l, r, grid.per_window);
    };
    const double gap = std::max(delta_e, 0.0);
    problem.velocity = [&, gap, r](const std::vector<double>& shape,
                                   const std::vector<double>& deriv) -> detail::VelocityEstimate {
        const double denom = ga_denominator(shape, deriv, r, grid.hz(), false);
        if (denom <= 0.0) throw ConvergenceError("vanishing denominator in the GA velocity formula");
        return {gap / denom, denom};
    };

    SolitonSolution sol = detail::solve_front(problem, grid, opts);
    sol.delta_e = gap;
    // report the denominator at the spec'd (exact-quadrature) precision
    const std::vector<double> deriv = detail::central_diff(sol.shape, grid.hz());
    sol.denominator = ga_denominator(sol.shape, deriv, r, grid.hz(), true);
    sol.velocity = sol.denominator > 0.0 ? gap / sol.denominator : sol.velocity;
    return sol;
}

} // namespace scwave
