// The cut-set / schedule linear program for half-duplex diamond networks.
//
// A state S (bitmask: bit i-1 set means relay i is transmitting) is one of
// the 2^n receive/transmit configurations; a schedule assigns a time share to
// each state. A cut W (bitmask: bit i-1 set means relay i is grouped with the
// source) bounds the flow by
//     max{ ell_i : i not in S, i not in W } + max{ r_i : i in S, i in W },
// with max over an empty set equal to 0. The approximate capacity is the
// largest t such that some schedule keeps every cut at or above t.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdcap/network.hpp"
#include "hdcap/simplex.hpp"

namespace hdcap {

using StateMask = std::uint32_t;
using CutMask = std::uint32_t;

// Networks above this size would need a >4096-row dense tableau per solve;
// requests beyond it fail loudly instead of thrashing.
inline constexpr int kMaxRelays = 12;

struct Schedule {
    int n = 0;
    std::map<StateMask, double> weights;  // state -> time share
};

enum class ArithmeticMode { Float64, ExactRational };

struct SolveDiagnostics {
    long pivots = 0;
    bool certificate_ok = false;
    std::vector<std::string> certificate_violations;
    bool exact = false;
    std::string exact_value;  // "p/q" in exact mode, empty otherwise
};

struct CapacityResult {
    double value = 0.0;
    Schedule schedule;
    std::vector<CutMask> tight_cuts;
    int support_size = 0;
    SolveDiagnostics diag;
};

struct ReducedLpSolution {
    double value = 0.0;          // optimum of the n+1 constraint alpha-program
    std::vector<double> alpha;   // per-relay receive-time share, in [0,1]
};

template <class T>
T cut_value(const BasicDiamondNetwork<T>& net, StateMask state, CutMask cut) {
    T best_ell(0), best_r(0);
    for (int i = 0; i < net.size(); ++i) {
        const std::uint32_t bit = 1u << i;
        if (!(state & bit) && !(cut & bit)) {
            if (net.relays[i].ell > best_ell) best_ell = net.relays[i].ell;
        }
        if ((state & bit) && (cut & bit)) {
            if (net.relays[i].r > best_r) best_r = net.relays[i].r;
        }
    }
    return best_ell + best_r;
}

// Columns: [t, lambda_0, ..., lambda_{2^n - 1}] with t free and lambda >= 0.
// Rows: one `t - sum_S lambda_S * cut(S, W) <= 0` per cut W in ascending
// bitmask order, then the equality `sum lambda = 1`.
template <class T>
LinearProgram<T> build_full_lp(const BasicDiamondNetwork<T>& net);

CapacityResult approximate_capacity(const DiamondNetwork& net,
                                    ArithmeticMode mode = ArithmeticMode::Float64,
                                    const SimplexOptions& options = {});

// Minimum over all cuts of the schedule-weighted cut values.
double schedule_rate(const DiamondNetwork& net, const Schedule& sched);

// min(max_i ell_i, max_i r_i): the full-duplex value of the two trivial cuts.
double trivial_upper_bound(const DiamondNetwork& net);

// Best single-relay capacity divided by the full approximate capacity.
// The quotient is clamped to 1 (operating one relay can never beat the
// network) and values within a few ulps of 1 are reported as exactly 1.
double ratio(const DiamondNetwork& net);

namespace detail {
double snap_ratio(double c1, double cn);
}

// g_t for t in [0:n], with sentinel z values of -1 outside [1:n] and alpha
// read as 0 outside [1:n]. z and alpha hold the entries for indices 1..n.
double g_function(const std::vector<double>& z, const std::vector<double>& alpha, int t);

// Maximizes Gamma subject to Gamma <= g_t(z, alpha) for t in [0:n] over
// alpha in [0,1]^n, with z fixed by the normalized network. Dropping all
// other cuts makes this an upper bound for the full program on the same
// network.
ReducedLpSolution reduced_lp(const NormalizedNetwork& norm);

extern template LinearProgram<double> build_full_lp(const BasicDiamondNetwork<double>&);
extern template LinearProgram<Rational> build_full_lp(const BasicDiamondNetwork<Rational>&);

}  // namespace hdcap
