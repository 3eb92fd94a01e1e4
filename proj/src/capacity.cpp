#include "hdcap/capacity.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hdcap {

namespace {

BasicDiamondNetwork<Rational> to_exact_network(const DiamondNetwork& net) {
    BasicDiamondNetwork<Rational> out;
    out.relays.reserve(net.relays.size());
    for (const auto& rl : net.relays) {
        out.relays.push_back({rational_from_double(rl.ell), rational_from_double(rl.r)});
    }
    return out;
}

void require_solvable_size(const DiamondNetwork& net) {
    require_valid(net);
    if (net.size() > kMaxRelays) {
        throw std::invalid_argument("network has " + std::to_string(net.size()) +
                                    " relays; the dense LP is capped at n <= " +
                                    std::to_string(kMaxRelays));
    }
}

}  // namespace

template <class T>
LinearProgram<T> build_full_lp(const BasicDiamondNetwork<T>& net) {
    const int n = net.size();
    if (n < 1) throw std::invalid_argument("build_full_lp: empty network");
    if (n > kMaxRelays) {
        throw std::invalid_argument("build_full_lp: n <= " + std::to_string(kMaxRelays) +
                                    " required");
    }
    const std::uint32_t num_states = 1u << n;

    LinearProgram<T> lp;
    lp.objective.assign(1 + num_states, T(0));
    lp.objective[0] = T(1);  // maximize t
    lp.signs.assign(1 + num_states, VarSign::NonNegative);
    lp.signs[0] = VarSign::Free;

    for (CutMask cut = 0; cut < num_states; ++cut) {
        std::vector<T> row(1 + num_states, T(0));
        row[0] = T(1);
        for (StateMask state = 0; state < num_states; ++state) {
            row[1 + state] = -cut_value(net, state, cut);
        }
        lp.add_inequality(std::move(row), T(0));
    }
    std::vector<T> sum_row(1 + num_states, T(1));
    sum_row[0] = T(0);
    lp.add_equality(std::move(sum_row), T(1));
    return lp;
}

template LinearProgram<double> build_full_lp(const BasicDiamondNetwork<double>&);
template LinearProgram<Rational> build_full_lp(const BasicDiamondNetwork<Rational>&);

CapacityResult approximate_capacity(const DiamondNetwork& net, ArithmeticMode mode,
                                    const SimplexOptions& options) {
    require_solvable_size(net);
    const int n = net.size();

    CapacityResult result;
    result.schedule.n = n;

    if (mode == ArithmeticMode::Float64) {
        LinearProgram<double> lp = build_full_lp(net);
        LpSolution<double> sol = solve(lp, options);
        if (sol.status != LpStatus::Optimal) {
            throw std::runtime_error(std::string("capacity LP not optimal: ") + to_string(sol.status));
        }
        CertificateReport cert = check_certificate(lp, sol, 1e-7);
        result.value = sol.value;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            double w = sol.primal[1 + s];
            if (w > 0.0) result.schedule.weights[s] = w;
        }
        result.tight_cuts.assign(sol.tight_rows.begin(), sol.tight_rows.end());
        result.diag.pivots = sol.pivots;
        result.diag.certificate_ok = cert.ok;
        result.diag.certificate_violations = std::move(cert.violations);
    } else {
        LinearProgram<Rational> lp = build_full_lp(to_exact_network(net));
        LpSolution<Rational> sol = solve(lp, options);
        if (sol.status != LpStatus::Optimal) {
            throw std::runtime_error(std::string("capacity LP not optimal: ") + to_string(sol.status));
        }
        CertificateReport cert = check_certificate(lp, sol, 0.0);
        result.value = to_double(sol.value);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            const Rational& w = sol.primal[1 + s];
            if (w > 0) result.schedule.weights[s] = to_double(w);
        }
        result.tight_cuts.assign(sol.tight_rows.begin(), sol.tight_rows.end());
        result.diag.pivots = sol.pivots;
        result.diag.certificate_ok = cert.ok;
        result.diag.certificate_violations = std::move(cert.violations);
        result.diag.exact = true;
        result.diag.exact_value = sol.value.get_str();
    }

    int support_size = 0;
    for (const auto& [state, w] : result.schedule.weights) {
        (void)state;
        if (result.diag.exact ? (w != 0.0) : (w > 1e-9)) ++support_size;
    }
    result.support_size = support_size;
    return result;
}

double schedule_rate(const DiamondNetwork& net, const Schedule& sched) {
    require_solvable_size(net);
    const int n = net.size();
    if (sched.n != n) throw std::invalid_argument("schedule_rate: schedule width mismatch");
    double total = 0.0;
    for (const auto& [state, w] : sched.weights) {
        if (state >= (1u << n)) throw std::invalid_argument("schedule_rate: state mask out of range");
        if (!(w >= 0.0)) throw std::invalid_argument("schedule_rate: negative schedule mass");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("schedule_rate: schedule mass sums to " + std::to_string(total));
    }

    double rate = std::numeric_limits<double>::infinity();
    for (CutMask cut = 0; cut < (1u << n); ++cut) {
        double v = 0.0;
        for (const auto& [state, w] : sched.weights) {
            v += w * cut_value(net, state, cut);
        }
        rate = std::min(rate, v);
    }
    return rate;
}

double trivial_upper_bound(const DiamondNetwork& net) {
    require_valid(net);
    double max_ell = 0.0, max_r = 0.0;
    for (const auto& rl : net.relays) {
        max_ell = std::max(max_ell, rl.ell);
        max_r = std::max(max_r, rl.r);
    }
    return std::min(max_ell, max_r);
}

namespace detail {

double snap_ratio(double c1, double cn) {
    double r = c1 / cn;
    if (r >= 1.0) return 1.0;
    if (1.0 - r <= 64.0 * DBL_EPSILON) return 1.0;
    return r;
}

}  // namespace detail

double ratio(const DiamondNetwork& net) {
    const double c1 = best_relay(net).second;
    const double cn = approximate_capacity(net).value;
    if (!(cn > 0.0)) throw std::domain_error("ratio: zero-capacity network");
    return detail::snap_ratio(c1, cn);
}

double g_function(const std::vector<double>& z, const std::vector<double>& alpha, int t) {
    const int n = static_cast<int>(z.size());
    if (static_cast<int>(alpha.size()) != n) {
        throw std::invalid_argument("g_function: alpha size must match z");
    }
    if (t < 0 || t > n) throw std::invalid_argument("g_function: t must lie in [0:n]");

    auto z_at = [&](int i) { return (i >= 1 && i <= n) ? z[i - 1] : -1.0; };
    auto a_at = [&](int i) { return (i >= 1 && i <= n) ? alpha[i - 1] : 0.0; };
    // The reciprocal terms divide by z at interior indices; sentinels give
    // 1/(-1) + 1 == 0 so boundary terms vanish exactly.
    for (int i : {t + 1, t + 2}) {
        if (i >= 1 && i <= n && z[i - 1] == 0.0) {
            throw std::domain_error("g_function: z[" + std::to_string(i) + "] is zero");
        }
    }
    const double at = a_at(t), at1 = a_at(t + 1);
    return (1.0 - at) * (z_at(t - 1) + 1.0) + at * (z_at(t) + 1.0) +
           (1.0 - at1) * (1.0 / z_at(t + 1) + 1.0) + at1 * (1.0 / z_at(t + 2) + 1.0);
}

ReducedLpSolution reduced_lp(const NormalizedNetwork& norm) {
    const int n = norm.network.size();
    if (n < 1 || static_cast<int>(norm.z.size()) != n) {
        throw std::invalid_argument("reduced_lp: malformed normalized network");
    }
    auto z_at = [&](int i) { return (i >= 1 && i <= n) ? norm.z[i - 1] : -1.0; };

    // Columns: [Gamma, alpha_1..alpha_n]. Each cut t contributes
    //   Gamma + (z_{t-1} - z_t) a_t + (1/z_{t+1} - 1/z_{t+2}) a_{t+1}
    //     <= (z_{t-1} + 1) + (1/z_{t+1} + 1),
    // which is g_t rearranged with the constant part on the right.
    LinearProgram<double> lp;
    lp.objective.assign(1 + n, 0.0);
    lp.objective[0] = 1.0;
    lp.signs.assign(1 + n, VarSign::NonNegative);
    lp.signs[0] = VarSign::Free;

    for (int t = 0; t <= n; ++t) {
        std::vector<double> row(1 + n, 0.0);
        row[0] = 1.0;
        if (t >= 1) row[t] += z_at(t - 1) - z_at(t);
        if (t + 1 <= n) row[t + 1] += 1.0 / z_at(t + 1) - 1.0 / z_at(t + 2);
        lp.add_inequality(std::move(row), (z_at(t - 1) + 1.0) + (1.0 / z_at(t + 1) + 1.0));
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<double> row(1 + n, 0.0);
        row[i] = 1.0;
        lp.add_inequality(std::move(row), 1.0);
    }

    LpSolution<double> sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw std::runtime_error("reduced_lp: solver returned non-optimal status");
    }
    ReducedLpSolution out;
    out.value = sol.value;
    out.alpha.assign(sol.primal.begin() + 1, sol.primal.end());
    return out;
}

}  // namespace hdcap
