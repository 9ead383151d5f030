#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scwave/degree_distribution.hpp"
#include "scwave/density.hpp"
#include "scwave/errors.hpp"

namespace scwave {

// Spatially indexed chain of scalar states.  values[i] lives at position
// z = -w+1+i, z running up to L_c; the first seed_count entries are pinned to
// seed_value after every step.  The right boundary is free (the last state is
// replicated past z = L_c).
struct ScalarProfile {
    std::vector<double> values;
    int w = 1;
    int chain_length = 0; // L_c
    int seed_count = 0;
    double seed_value = 0.0;
    int t = 0;

    static ScalarProfile make(int chain_length, int w, int seed_count, double seed_value, double init_value);
    double z_of(int index) const { return static_cast<double>(index - (w - 1)); }
    int size() const { return static_cast<int>(values.size()); }
    double at_clamped(int index) const {
        if (index < 0) index = 0;
        if (index >= size()) index = size() - 1;
        return values[static_cast<size_t>(index)];
    }
    void pin_seed() {
        for (int i = 0; i < seed_count; ++i) values[static_cast<size_t>(i)] = seed_value;
    }
};

// Density-valued profile with the same indexing conventions.
struct DensityProfile {
    std::vector<Density> states;
    int w = 1;
    int chain_length = 0;
    int seed_count = 0;
    int t = 0;

    static DensityProfile make(int chain_length, int w, int seed_count, const Density& seed, const Density& init);
    double z_of(int index) const { return static_cast<double>(index - (w - 1)); }
    int size() const { return static_cast<int>(states.size()); }
};

// One synchronous update of the smoothed coupled BEC recursion
//   x_z <- (1/w) sum_i eps_{z-i} lambda((1/w) sum_j (1 - rho(1 - x_{z-i+j})))
// with eps_z = 0 on the seed block.
void bec_coupled_step(ScalarProfile& p, double eps, const DegreeDistribution& d);

// Density form of the same update (check-node input distributions).
void density_coupled_step(DensityProfile& p, const Density& c, const DegreeDistribution& d);

// Observable used for kink tracking of density profiles.  Equals the erasure
// mass on the BEC and stays meaningful for every BMS channel.
std::vector<double> entropy_profile(const DensityProfile& p);

struct KinkSample {
    int t = 0;
    double position = 0.0; // z units
};

struct KinkTrajectory {
    std::vector<KinkSample> samples;
    double reference_level = 0.0;
};

// Interpolated z where the profile first crosses `level` from below.
std::optional<double> find_kink(const std::vector<double>& values, int w, double level);
double kink_position(const ScalarProfile& p, double level); // throws NoCrossingError

// v_e = mean over consecutive sample pairs of dz / (w dt).
double empirical_velocity(const KinkTrajectory& traj, int w);

enum class RunStatus {
    ok,           // traveling wave measured
    full_decode,  // profile collapsed to the good value everywhere
    chain_limited // kink hit the right guard before two samples were taken
};

const char* to_string(RunStatus s);

struct RunOptions {
    int t_transient = 100;
    int sample_every = 20;
    int t_max = 200000;
    double right_guard_windows = 10.0; // stop when the kink is this many w from the right edge
};

struct RunReport {
    KinkTrajectory trajectory;
    double v_e = 0.0;
    RunStatus status = RunStatus::ok;
    int final_t = 0;
    std::vector<double> final_observable;
};

// Evolves a profile with `step`, sampling the kink position of `observe(p)`
// every sample_every iterations past the transient.
RunReport run_and_measure(ScalarProfile p, double reference_level,
                          const std::function<void(ScalarProfile&)>& step, const RunOptions& opts = {});

RunReport run_and_measure_density(DensityProfile p, double reference_level,
                                  const std::function<void(DensityProfile&)>& step, const RunOptions& opts = {});

// Discrete coupled potential, scalar framework form:
//   U(x) = sum_z [x_z g(x_z) - G(x_z)] - sum_z F((1/w) sum_i g(x_{z+i}))
// (declared in scalar_system.hpp to avoid a dependency cycle).

// Discrete coupled potential of the density form; c_z is dirac_infinity on
// the seed block and `c` elsewhere.
double coupled_potential_density(const DensityProfile& p, const Density& c, const DegreeDistribution& d);

} // namespace scwave
