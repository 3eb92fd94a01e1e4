// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code next to each check.
//
// Run from the build tree: ./tests/acceptance

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hdcap/capacity.hpp"
#include "hdcap/experiments.hpp"
#include "hdcap/network.hpp"
#include "hdcap/theory.hpp"
#include "hdcap/worst_case.hpp"
#include "oracle.hpp"

using namespace hdcap;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %2d: %s (%s; %.2fs)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void run_criterion(int index, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, name, pass, detail, seconds);
}

char buffer[256];
std::string fmt(const char* format, double a, double b = 0.0) {
    std::snprintf(buffer, sizeof(buffer), format, a, b);
    return buffer;
}

// --- criterion bodies -------------------------------------------------------

bool closed_form_bound(std::string& detail) {
    const double b2 = bound(2), b3 = bound(3), b_large = bound(10000);
    detail = fmt("bound(3)=%.9f, bound(1e4)-0.25=%.2e", b3, b_large - 0.25);
    return std::fabs(b2 - 0.5) <= 1e-12 && std::fabs(b3 - 0.381966011) <= 1e-6 &&
           std::fabs(b_large - 0.25) <= 1e-7;
}

bool sigma_consistency(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        double best = -2.0;
        for (BoundaryCase c : kAllBoundaryCases) {
            const int m = max_m(n, c);
            if (m >= 1) best = std::max(best, sigma_nm(m, c));
        }
        worst = std::max(worst, std::fabs(best + 2.0 - opt4(n)));
    }
    detail = fmt("max |sigma+2 - opt4| over n in [1:50] = %.2e", worst);
    return worst <= 1e-12;
}

bool beta_profile_consistency(std::string& detail) {
    double worst_g = 0.0, worst_rec = 0.0, worst_term = 0.0;
    int combos = 0;
    for (int n = 2; n <= 12; ++n) {
        for (BoundaryCase c : kAllBoundaryCases) {
            for (int m = 1; m <= max_m(n, c); ++m) {
                if (c == BoundaryCase::ZeroInfinite && m == 1) continue;  // structurally void
                ++combos;
                const double sigma = sigma_nm(m, c);
                const auto rec = recurrence_solution(m, c);
                for (int i = 1; i + 1 <= m; ++i) {
                    worst_rec = std::max(
                        worst_rec, std::fabs(rec.b[i + 1] - sigma * rec.b[i] + rec.b[i - 1]));
                }
                const bool beta_m_infinite =
                    c == BoundaryCase::PositiveInfinite || c == BoundaryCase::ZeroInfinite;
                if (beta_m_infinite) {
                    worst_term = std::max(worst_term, std::fabs(rec.b[m]));
                } else {
                    worst_term = std::max(
                        worst_term, std::fabs(rec.b[m - 1] - (sigma + 1.0) * rec.b[m]));
                }
                const auto profile = beta_profile(n, m, c);
                for (const auto& g : G_values(profile)) {
                    if (!g.infinite) worst_g = std::max(worst_g, std::fabs(g.value - (sigma + 2.0)));
                }
            }
        }
    }
    detail = fmt("%.0f combos; max G dev %.1e", static_cast<double>(combos), worst_g) +
             fmt(", recurrence %.1e, terminal %.1e", worst_rec, worst_term);
    return worst_g <= 1e-9 && worst_rec <= 1e-9 && worst_term <= 1e-9;
}

bool even_tightness(std::string& detail) {
    double worst_gap = 0.0, worst_cap = 0.0, worst_rate = 0.0;
    bool pass = true;
    for (int n : {2, 4, 6, 8}) {
        const auto report = verify_tightness(FamilyId::Even1, n, 0.0, 1e-6);
        pass = pass && report.pass;
        worst_gap = std::max(worst_gap, report.gap);
        worst_cap = std::max(worst_cap, std::fabs(report.cn - opt4(n)));
        worst_rate = std::max(worst_rate, std::fabs(report.two_state_rate - opt4(n)));
    }
    detail = fmt("max gap %.1e, max |Cn-opt4| %.1e", worst_gap, worst_cap) +
             fmt(", max |rate-opt4| %.1e", worst_rate);
    return pass && worst_cap <= 1e-6 && worst_rate <= 1e-9;
}

bool odd_tightness(std::string& detail) {
    double worst_gap = 0.0;
    bool monotone = true, pass = true;
    for (int n : {3, 5, 7}) {
        for (FamilyId family : {FamilyId::Odd1, FamilyId::Odd2}) {
            double previous = std::numeric_limits<double>::infinity();
            double final_gap = 0.0;
            for (double L : {1e3, 1e6, 1e9}) {
                const auto report = verify_tightness(family, n, L, 1e-4);
                monotone = monotone && report.gap <= previous;
                previous = report.gap;
                final_gap = report.gap;
            }
            pass = pass && final_gap <= 1e-4;
            worst_gap = std::max(worst_gap, final_gap);
        }
    }
    detail = fmt("max gap at L=1e9: %.1e; gaps monotone in L: %.0f", worst_gap, monotone ? 1 : 0);
    return pass && monotone;
}

bool samplewise_floor(std::string& detail) {
    const long trials = 1000;
    long violations = 0;
    double worst_margin = 1.0;  // min of ratio - bound(n)
    for (int n = 2; n <= 8; ++n) {
        const double floor_n = bound(n) - 1e-9;
        std::vector<double> margins(2 * trials);
#pragma omp parallel for schedule(dynamic)
        for (long trial = 0; trial < 2 * trials; ++trial) {
            DiamondNetwork net;
            if (trial < trials) {
                auto rng = trial_stream(611, n, trial);
                net = sample_rayleigh_network(n, 1.0, rng);
            } else {
                auto rng = trial_stream(612, n, trial);
                net = hdcap::testing::random_log_uniform_network(rng, n, 0.05, 20.0);
            }
            margins[trial] = ratio(net) - floor_n;
        }
        for (double m : margins) {
            if (m < 0.0) ++violations;
            worst_margin = std::min(worst_margin, m);
        }
    }
    detail = fmt("14000 networks, %.0f violations; min(ratio - floor) = %.2e",
                 static_cast<double>(violations), worst_margin);
    return violations == 0;
}

bool lp_correctness(std::string& detail) {
    std::mt19937_64 rng(808);
    double worst_diff = 0.0;
    bool certificates = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 6;
        const auto net = hdcap::testing::random_dyadic_network(rng, n);
        const auto approx = approximate_capacity(net);
        const auto exact = approximate_capacity(net, ArithmeticMode::ExactRational);
        certificates = certificates && approx.diag.certificate_ok && exact.diag.certificate_ok;
        worst_diff = std::max(worst_diff, std::fabs(approx.value - exact.value) /
                                              (1.0 + std::fabs(exact.value)));
    }

    // grid oracle over the schedule 3-simplex at step 1e-3
    double worst_above = 0.0, worst_below = 0.0;
    std::vector<DiamondNetwork> nets;
    nets.push_back(DiamondNetwork{{{2.0, 2.0}, {2.0, 2.0}}});
    for (int i = 0; i < 5; ++i) nets.push_back(hdcap::testing::random_uniform_network(rng, 2, 0.3, 5.0));
    for (const auto& net : nets) {
        const double lp = approximate_capacity(net).value;
        const double grid = hdcap::testing::grid_capacity_n2(net, 1000);
        worst_above = std::max(worst_above, grid - lp);   // grid must never exceed the LP
        worst_below = std::max(worst_below, lp - grid);   // and must come close from below
    }
    detail = fmt("exact-float rel dev %.1e; grid: excess %.1e", worst_diff, worst_above) +
             fmt(", slack %.1e", worst_below);
    return certificates && worst_diff <= 1e-7 && worst_above <= 1e-9 && worst_below <= 4e-3;
}

bool reduction_chain(std::string& detail) {
    std::mt19937_64 rng(909);
    double worst_chain = -1.0, worst_opt4 = -1.0;
    int count = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 29; ++trial) {
            const auto norm = normalize(hdcap::testing::random_uniform_network(rng, n, 0.1, 8.0));
            const double opt0 = approximate_capacity(norm.network).value;
            const double opt1 = reduced_lp(norm).value;
            worst_chain = std::max(worst_chain, opt0 - opt1);
            worst_opt4 = std::max(worst_opt4, opt1 - opt4(n));
            ++count;
        }
    }
    detail = fmt("%.0f networks; max OPT0-OPT1 %.1e", static_cast<double>(count), worst_chain) +
             fmt(", max OPT1-opt4 %.1e", worst_opt4);
    return worst_chain <= 1e-9 && worst_opt4 <= 1e-9;
}

bool figure3_reproduction(std::string& detail) {
    const auto result = monte_carlo({1, 3}, 1000, 20200513, /*keep_raw=*/true);
    const auto& s1 = result.stats[0];
    const auto& s3 = result.stats[1];
    const bool degenerate = s1.min == 1.0 && s1.max == 1.0 && s1.median == 1.0 &&
                            s1.q25 == 1.0 && s1.q75 == 1.0;
    const bool bands = s3.median >= 0.61 && s3.median <= 0.71 && s3.q75 >= 0.67 && s3.q75 <= 0.77;
    bool floor_ok = true;
    for (const auto& rec : result.raw) {
        if (rec.n == 3 && rec.ratio < bound(3) - 1e-9) floor_ok = false;
    }
    detail = fmt("n=3 median %.4f, q75 %.4f", s3.median, s3.q75) +
             (degenerate ? "; n=1 degenerate at 1.0" : "; n=1 NOT degenerate");
    return degenerate && bands && floor_ok;
}

bool worst_case_tables(std::string& detail) {
    const double s2 = std::sqrt(2.0);
    const auto even6 = worst_even_type1(6);
    const double ells[6] = {s2, s2, 2.0, 2.0, 2.0 + s2, 2.0 + s2};
    double worst_even = 0.0;
    for (int i = 0; i < 6; ++i) {
        worst_even = std::max(worst_even, std::fabs(even6.relays[i].ell - ells[i]));
        worst_even = std::max(worst_even, std::fabs(even6.relays[i].r - ells[5 - i]));
    }

    const auto odd5 = worst_odd_type1(5, 1e6);
    const double table[5][2] = {
        {1.0, 1e6}, {1.8019, 2.2470}, {1.8019, 2.2470}, {3.2470, 1.4450}, {3.2470, 1.4450}};
    double worst_odd = 0.0;
    for (int i = 0; i < 5; ++i) {
        worst_odd = std::max(worst_odd, std::fabs(odd5.relays[i].ell - table[i][0]));
        worst_odd = std::max(worst_odd, std::fabs(odd5.relays[i].r - table[i][1]));
    }
    detail = fmt("even1(6) dev %.1e; odd1(5) dev %.1e", worst_even, worst_odd);
    return worst_even <= 1e-12 && worst_odd <= 1e-4;
}

bool capacity_axioms(std::string& detail) {
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 8;
        const auto net = hdcap::testing::random_uniform_network(rng, n, 0.1, 6.0);
        const auto result = approximate_capacity(net);

        auto bumped = net;
        const int which = trial % n;
        if (trial % 2 == 0) {
            bumped.relays[which].ell += 0.25 + uniform01(rng);
        } else {
            bumped.relays[which].r += 0.25 + uniform01(rng);
        }
        const double bumped_value = approximate_capacity(bumped).value;
        ok = ok && bumped_value >= result.value - 1e-9;
        worst = std::max(worst, result.value - bumped_value);

        const double alpha = 0.25 + 4.0 * uniform01(rng);
        const double scaled = approximate_capacity(scale(net, alpha)).value;
        ok = ok && std::fabs(scaled - alpha * result.value) <= 1e-9 * (1.0 + alpha * result.value);

        const auto perm = hdcap::testing::random_permutation(rng, n);
        DiamondNetwork shuffled;
        for (int idx : perm) shuffled.relays.push_back(net.relays[idx]);
        const double permuted = approximate_capacity(shuffled).value;
        ok = ok && std::fabs(permuted - result.value) <= 1e-9 * (1.0 + result.value);

        const double rate = schedule_rate(net, result.schedule);
        ok = ok && std::fabs(rate - result.value) <= 1e-9;
        ok = ok && result.value <= trivial_upper_bound(net) + 1e-9;
    }
    detail = fmt("200 networks; max monotonicity deficit %.1e", std::max(worst, 0.0));
    return ok;
}

}  // namespace

int main() {
    std::printf("hdcap acceptance suite\n");
    run_criterion(1, "closed-form bound values", closed_form_bound);
    run_criterion(2, "sigma maximization matches opt4 for n in [1:50]", sigma_consistency);
    run_criterion(3, "beta profiles / recurrences / G values", beta_profile_consistency);
    run_criterion(4, "even-family tightness at n in {2,4,6,8}", even_tightness);
    run_criterion(5, "odd-family tightness, gap shrinking in L", odd_tightness);
    run_criterion(6, "ratio floor on 14000 random networks", samplewise_floor);
    run_criterion(7, "LP exact/float agreement, certificates, grid oracle", lp_correctness);
    run_criterion(8, "reduction chain OPT0 <= OPT1 <= opt4", reduction_chain);
    run_criterion(9, "Monte-Carlo box statistics at n=3 (seeded)", figure3_reproduction);
    run_criterion(10, "worst-case network tables", worst_case_tables);
    run_criterion(11, "capacity axioms on 200 random networks", capacity_axioms);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
