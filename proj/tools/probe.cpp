// scratch numeric probe (removed before release)
#include <cstdio>
#include <string>

#include "scwave/coupled.hpp"
#include "scwave/gaussian.hpp"
#include "scwave/scalar_system.hpp"
#include "scwave/scaling.hpp"
#include "scwave/single_system.hpp"
#include "scwave/soliton.hpp"

using namespace scwave;

int main(int argc, char** argv) {
    const std::string what = argc > 1 ? argv[1] : "bec";
    const auto d36 = DegreeDistribution::regular(3, 6);

    if (what == "bec") {
        std::printf("x_bp(0.46)      = %.6f\n", bec_fixed_point_from(1.0, 0.46, d36));
        std::printf("eps_bp(3,6)     = %.6f\n", threshold_bp_bec(d36));
        std::printf("eps_map(3,6)    = %.6f\n", threshold_map_bec(d36));
        std::printf("gap(0.46)       = %.6e\n", energy_gap_bec(0.46, d36));
        const auto d46 = DegreeDistribution::regular(4, 6);
        std::printf("eps_map(4,6)    = %.6f\n", threshold_map_bec(d46));
    } else if (what == "soliton") {
        for (double eps : {0.45, 0.46, 0.47, 0.48}) {
            const auto sol = solve_soliton_bec(eps, d36);
            std::printf("eps=%.2f  v=%.5f  denom=%.5f  dE=%.6e  res=%.2e  it=%d\n", eps, sol.velocity,
                        sol.denominator, sol.delta_e, sol.residual, sol.iterations);
        }
        const auto ctx = prepare_linear_bec(d36);
        std::printf("eps_map=%.6f x_map=%.6f D_map=%.6f\n", ctx.eps_map, ctx.x_map, ctx.denominator_map);
        for (double eps : {0.45, 0.46, 0.47, 0.48})
            std::printf("v_l(%.2f) = %.5f\n", eps, velocity_linear_bec(eps, ctx));
        const auto d46 = DegreeDistribution::regular(4, 6);
        const auto sol46 = solve_soliton_bec(0.6, d46);
        std::printf("(4,6) eps=0.6 v=%.5f (v_l=%.5f)\n", sol46.velocity, velocity_linear_bec(0.6, d46));
    } else if (what == "empirical") {
        for (double eps : {0.45, 0.46, 0.47, 0.48}) {
            const double x_bad = bec_fixed_point_from(1.0, eps, d36);
            auto p = ScalarProfile::make(1024, 8, 8, 0.0, 1.0);
            auto rep = run_and_measure(
                p, 0.5 * x_bad, [&](ScalarProfile& q) { bec_coupled_step(q, eps, d36); }, {});
            std::printf("eps=%.2f  v_e=%.5f  status=%s samples=%zu\n", eps, rep.v_e, to_string(rep.status),
                        rep.trajectory.samples.size());
            const auto vb = bound_vB(
                [&] {
                    ScalarProfile q = ScalarProfile::make(1024, 8, 8, 0.0, 1.0);
                    for (int t = 0; t < 400; ++t) bec_coupled_step(q, eps, d36);
                    return q;
                }(),
                eps, d36, 1.0);
            std::printf("          v_B=%.5f  v_B2=%.5f\n", vb, bound_vB2(eps, d36, 1.0));
        }
    } else if (what == "ga") {
        std::printf("psi(0)=%.12f psi(2.4)=%.9f\n", psi(0.0), psi(2.4));
        std::printf("psi_inv(psi(2.4)) = %.12f\n", psi_inv(psi(2.4)));
        std::printf("psi'(2.4)=%.9f psi''(2.4)=%.9f\n", psi_prime(2.4), psi_second(2.4));
        // stationarity of the GA potential at the GA DE fixed point
        for (double mc : {2.33, 2.40}) {
            const double p_bad = ga_fixed_point_from(1.0, mc, 3, 6);
            const double h = 1e-6;
            const double fd =
                (ga_potential(p_bad + h, mc, 3, 6) - ga_potential(p_bad - h, mc, 3, 6)) / (2.0 * h);
            std::printf("mc=%.2f p_bad=%.6f dW/dp|fp=%.3e gap=%.6e\n", mc, p_bad, fd, ga_energy_gap(mc, 3, 6));
        }
        const auto th = ga_thresholds(3, 6);
        std::printf("GA(3,6): m_bp=%.4f m_map=%.4f h_bp=%.4f h_map=%.4f\n", th.m_bp, th.m_map, th.h_bp, th.h_map);
    } else if (what == "gav") {
        for (int lr : {0, 1}) {
            const int l = lr ? 4 : 3, r = lr ? 8 : 6;
            for (double mc : {2.33, 2.35, 2.38, 2.40}) {
                const auto sol = solve_soliton_ga(mc, l, r);
                auto prof = ScalarProfile::make(100, 3, 3, 0.0, 1.0);
                const double p_bad = ga_fixed_point_from(1.0, mc, l, r);
                auto rep = run_and_measure(
                    prof, 0.5 * p_bad, [&](ScalarProfile& q) { ga_coupled_step(q, mc, l, r); }, {});
                std::printf("(%d,%d) mc=%.2f  v_GA=%.5f  v_e=%.5f (it=%d)\n", l, r, mc, sol.velocity, rep.v_e,
                            sol.iterations);
            }
        }
    } else if (what == "gldpc") {
        const auto sys = gldpc_system(15, 3);
        const auto th = scalar_thresholds(sys);
        std::printf("gldpc(15,3): eps_a=%.5f eps_pot=%.5f\n", th.eps_a, th.eps_pot);
        for (double eps : {0.355, 0.37, 0.385}) {
            const auto sol = scalar_soliton(sys, eps);
            const auto fp = scalar_fixed_points(sys, eps);
            auto prof = ScalarProfile::make(497, 3, 2, fp.x_good, fp.x_bad.value());
            auto rep = run_and_measure(
                prof, 0.5 * *fp.x_bad, [&](ScalarProfile& q) { scalar_coupled_step(q, sys, eps); }, {});
            std::printf("eps=%.3f v=%.5f v_e=%.5f\n", eps, sol.velocity, rep.v_e);
        }
    } else if (what == "cs") {
        std::printf("mmse(0, 0.1)=%.8f  mmse(3, 1.0)=%.8f vs %.8f\n", mmse_bernoulli_gaussian(0.0, 0.1),
                    mmse_bernoulli_gaussian(3.0, 1.0), 1.0 / 4.0);
        const double h = 1e-3;
        const double fd =
            (mutual_info_bernoulli_gaussian(3.0 + h, 0.1) - mutual_info_bernoulli_gaussian(3.0 - h, 0.1)) / (2 * h);
        std::printf("2 dI/ds(3) = %.8f vs mmse = %.8f\n", 2 * fd, mmse_bernoulli_gaussian(3.0, 0.1));
        const auto sys = cs_system(0.1, 1e5);
        const auto th = scalar_thresholds(sys);
        std::printf("cs(0.1,1e5): delta_amp=%.5f delta_opt=%.5f\n", th.eps_a, th.eps_pot);
        for (double delta : {0.17, 0.19}) {
            const auto sol = scalar_soliton(sys, delta);
            const auto fp = scalar_fixed_points(sys, delta);
            auto prof = ScalarProfile::make(246, 4, 3, fp.x_good, fp.x_bad.value());
            auto rep = run_and_measure(
                prof, 0.5 * *fp.x_bad, [&](ScalarProfile& q) { scalar_coupled_step(q, sys, delta); }, {});
            std::printf("delta=%.3f v=%.5f v_e=%.5f\n", delta, sol.velocity, rep.v_e);
        }
    } else if (what == "gamma") {
        for (auto [l, r] : {std::pair{3, 6}, {4, 8}, {4, 6}}) {
            const auto d = DegreeDistribution::regular(l, r);
            const auto rep = gamma_report(d);
            std::printf("(%d,%d): eps=%.4f gamma_bar=%.4f limit=%.4f published=%.3f\n", l, r, rep.eps_eval,
                        rep.gamma_bar, rep.gamma_bar_limit, rep.published_gamma.value_or(0.0));
        }
    }
    return 0;
}
