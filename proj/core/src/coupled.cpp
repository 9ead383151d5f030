#include "scwave/coupled.hpp"

#include <algorithm>
#include <cmath>

namespace scwave {

ScalarProfile ScalarProfile::make(int chain_length, int w, int seed_count, double seed_value, double init_value) {
    if (chain_length < 1 || w < 1) throw ConfigError("profile needs chain_length >= 1 and w >= 1");
    if (seed_count < 0 || seed_count > chain_length + w) throw ConfigError("bad seed size");
    ScalarProfile p;
    p.w = w;
    p.chain_length = chain_length;
    p.seed_count = seed_count;
    p.seed_value = seed_value;
    p.values.assign(static_cast<size_t>(chain_length + w), init_value);
    p.pin_seed();
    return p;
}

DensityProfile DensityProfile::make(int chain_length, int w, int seed_count, const Density& seed,
                                    const Density& init) {
    if (chain_length < 1 || w < 1) throw ConfigError("profile needs chain_length >= 1 and w >= 1");
    DensityProfile p;
    p.w = w;
    p.chain_length = chain_length;
    p.seed_count = seed_count;
    p.states.assign(static_cast<size_t>(chain_length + w), init);
    for (int i = 0; i < seed_count; ++i) p.states[static_cast<size_t>(i)] = seed;
    return p;
}

void bec_coupled_step(ScalarProfile& p, double eps, const DegreeDistribution& d) {
    const int n = p.size();
    const int w = p.w;
    // check-node stage, window-averaged: s_i = (1/w) sum_j (1 - rho(1 - x_{i+j}))
    std::vector<double> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < w; ++j) acc += 1.0 - d.rho(1.0 - p.at_clamped(i + j));
        s[static_cast<size_t>(i)] = acc / w;
    }
    std::vector<double> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < w; ++j) {
            const int k = i - j;
            if (k < p.seed_count) continue; // eps_z = 0 on the seed block
            acc += eps * d.lambda(k < n ? s[static_cast<size_t>(k)] : s[static_cast<size_t>(n - 1)]);
        }
        next[static_cast<size_t>(i)] = acc / w;
    }
    p.values = std::move(next);
    p.pin_seed();
    ++p.t;
}

void density_coupled_step(DensityProfile& p, const Density& c, const DegreeDistribution& d) {
    const int n = p.size();
    const int w = p.w;
    const auto grid = p.states.front().grid_ptr();

    std::vector<Density> rho_x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rho_x[static_cast<size_t>(i)] = poly_lift_cn(d.rho, p.states[static_cast<size_t>(i)]);

    auto rho_at = [&](int i) -> const Density& {
        return rho_x[static_cast<size_t>(std::clamp(i, 0, n - 1))];
    };

    // window average of the check outputs
    std::vector<Density> avg(static_cast<size_t>(n), Density(grid));
    for (int i = 0; i < n; ++i) {
        Density acc(grid);
        for (int j = 0; j < w; ++j) acc.axpy(1.0 / w, rho_at(i + j));
        avg[static_cast<size_t>(i)] = std::move(acc);
    }

    std::vector<Density> next(static_cast<size_t>(n), Density(grid));
    const Density seed_state = dirac_infinity(grid);
    for (int i = 0; i < n; ++i) {
        Density acc(grid);
        for (int j = 0; j < w; ++j) {
            const int k = i - j;
            if (k < p.seed_count) {
                acc.axpy(1.0 / w, seed_state); // perfect channel on the seed block
                continue;
            }
            const Density& a = avg[static_cast<size_t>(std::min(k, n - 1))];
            acc.axpy(1.0 / w, vn_convolve(c, poly_lift_vn(d.lambda, a)));
        }
        next[static_cast<size_t>(i)] = std::move(acc);
    }
    p.states = std::move(next);
    for (int i = 0; i < p.seed_count; ++i) p.states[static_cast<size_t>(i)] = seed_state;
    ++p.t;
}

std::vector<double> entropy_profile(const DensityProfile& p) {
    std::vector<double> out(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) out[static_cast<size_t>(i)] = entropy(p.states[static_cast<size_t>(i)]);
    return out;
}

std::optional<double> find_kink(const std::vector<double>& values, int w, double level) {
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] < level && values[i + 1] >= level) {
            const double frac = (level - values[i]) / (values[i + 1] - values[i]);
            return static_cast<double>(i) - (w - 1) + frac;
        }
    }
    return std::nullopt;
}

double kink_position(const ScalarProfile& p, double level) {
    const auto z = find_kink(p.values, p.w, level);
    if (!z) throw NoCrossingError("profile does not cross the reference level");
    return *z;
}

double empirical_velocity(const KinkTrajectory& traj, int w) {
    if (traj.samples.size() < 2) throw ConvergenceError("need at least two kink samples");
    double acc = 0.0;
    int n = 0;
    for (size_t i = 0; i + 1 < traj.samples.size(); ++i) {
        const auto& a = traj.samples[i];
        const auto& b = traj.samples[i + 1];
        acc += (b.position - a.position) / (static_cast<double>(w) * (b.t - a.t));
        ++n;
    }
    return acc / n;
}

const char* to_string(RunStatus s) {
    switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::full_decode: return "full_decode";
    case RunStatus::chain_limited: return "chain_limited";
    }
    return "?";
}

namespace {

template <class Profile, class Step, class Observe>
RunReport run_impl(Profile p, double reference_level, Step&& step, Observe&& observe, const RunOptions& opts) {
    RunReport report;
    report.trajectory.reference_level = reference_level;
    const double z_guard = static_cast<double>(p.chain_length) - opts.right_guard_windows * p.w;

    auto max_value = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };

    for (int t = 0; t < opts.t_max; ++t) {
        step(p);
        if (p.t < opts.t_transient) continue;
        if ((p.t - opts.t_transient) % opts.sample_every != 0) continue;

        const std::vector<double> obs = observe(p);
        const auto z = find_kink(obs, p.w, reference_level);
        if (!z) {
            if (max_value(obs) < reference_level) {
                // collapsed to the good phase: full decoding, no stationary wave
                report.status = RunStatus::full_decode;
                report.v_e = 0.0;
                report.final_t = p.t;
                report.final_observable = obs;
                return report;
            }
            // kink not formed yet (still in transient shape); keep going
            continue;
        }
        report.trajectory.samples.push_back({p.t, *z});
        if (*z > z_guard) break; // stop before the kink feels the free boundary
    }
    const std::vector<double> obs = observe(p);
    report.final_t = p.t;
    report.final_observable = obs;
    if (report.trajectory.samples.size() < 2) {
        report.status = RunStatus::chain_limited;
        report.v_e = 0.0;
        return report;
    }
    report.status = RunStatus::ok;
    report.v_e = empirical_velocity(report.trajectory, p.w);
    return report;
}

} // namespace

RunReport run_and_measure(ScalarProfile p, double reference_level, const std::function<void(ScalarProfile&)>& step,
                          const RunOptions& opts) {
    return run_impl(
        std::move(p), reference_level, [&](ScalarProfile& q) { step(q); },
        [](const ScalarProfile& q) { return q.values; }, opts);
}

RunReport run_and_measure_density(DensityProfile p, double reference_level,
                                  const std::function<void(DensityProfile&)>& step, const RunOptions& opts) {
    return run_impl(
        std::move(p), reference_level, [&](DensityProfile& q) { step(q); },
        [](const DensityProfile& q) { return entropy_profile(q); }, opts);
}

double coupled_potential_density(const DensityProfile& p, const Density& c, const DegreeDistribution& d) {
    const int n = p.size();
    const int w = p.w;
    const auto grid = p.states.front().grid_ptr();
    const Density cinf = dirac_infinity(grid);

    std::vector<Density> rho_x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rho_x[static_cast<size_t>(i)] = poly_lift_cn(d.rho, p.states[static_cast<size_t>(i)]);
    auto rho_at = [&](int i) -> const Density& {
        return rho_x[static_cast<size_t>(std::clamp(i, 0, n - 1))];
    };

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Density& x = p.states[static_cast<size_t>(i)];
        Density window(grid);
        for (int j = 0; j < w; ++j) window.axpy(1.0 / w, rho_at(i + j));
        const Density& cz = i < p.seed_count ? cinf : c;
        total += entropy(poly_lift_cn(d.R, x)) / d.Rp1 + entropy(rho_at(i)) - entropy(cn_convolve(x, rho_at(i))) -
                 entropy(vn_convolve(cz, poly_lift_vn(d.L, window))) / d.Lp1;
    }
    return total;
}

} // namespace scwave
