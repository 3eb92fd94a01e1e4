#include "hdcap/worst_case.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hdcap/theory.hpp"

namespace hdcap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinL = 1e3;

double theta_for(int n) { return 2.0 * kPi / (n + 2.0); }

void require_even(int n, const char* who) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": n must be an even integer >= 2");
    }
}

void require_odd(int n, const char* who) {
    if (n < 3 || n % 2 != 1) {
        throw std::invalid_argument(std::string(who) + ": n must be an odd integer >= 3");
    }
}

void require_L(double L, const char* who) {
    if (!(L >= kMinL) || !std::isfinite(L)) {
        throw std::invalid_argument(std::string(who) + ": L must be finite and >= 1e3");
    }
}

StateMask mask_of_odds(int lo, int hi) {  // odd relay indices in [lo, hi], 1-based
    StateMask m = 0;
    for (int i = lo; i <= hi; i += 2) m |= 1u << (i - 1);
    return m;
}

StateMask mask_of_evens(int hi) {  // 2, 4, ..., hi
    StateMask m = 0;
    for (int i = 2; i <= hi; i += 2) m |= 1u << (i - 1);
    return m;
}

}  // namespace

const char* to_string(FamilyId f) {
    switch (f) {
        case FamilyId::Even1: return "even1";
        case FamilyId::Even2: return "even2";
        case FamilyId::Odd1: return "odd1";
        case FamilyId::Odd2: return "odd2";
    }
    return "unknown";
}

FamilyId family_from_string(const std::string& name) {
    if (name == "even1") return FamilyId::Even1;
    if (name == "even2") return FamilyId::Even2;
    if (name == "odd1") return FamilyId::Odd1;
    if (name == "odd2") return FamilyId::Odd2;
    throw std::invalid_argument("unknown family '" + name + "'");
}

DiamondNetwork worst_even_type1(int n) {
    require_even(n, "worst_even_type1");
    if (n > kMaxRelays) throw std::invalid_argument("worst_even_type1: n must be <= 12");
    const double th = theta_for(n);
    const int k = n / 2;
    DiamondNetwork net;
    net.relays.resize(n);
    for (int i = 1; i <= k; ++i) {
        const double num = 2.0 * std::sin(th) * std::sin(i * th);
        const double ell = num / (std::cos(i * th) - std::cos((i + 1) * th));
        const double r = num / (std::cos((i - 1) * th) - std::cos(i * th));
        net.relays[2 * i - 2] = {ell, r};
        net.relays[2 * i - 1] = {ell, r};
    }
    return net;
}

DiamondNetwork worst_even_type2(int n, double L) {
    require_even(n, "worst_even_type2");
    require_L(L, "worst_even_type2");
    const double th = theta_for(n);
    const int k = n / 2;
    DiamondNetwork net;
    net.relays.resize(n);
    net.relays[0] = {1.0, L};
    net.relays[n - 1] = {L, 1.0};
    for (int i = 1; i <= k - 1; ++i) {
        const double num = std::sin(i * th) + std::sin((i + 1) * th);
        const double ell = num / std::sin((i + 1) * th);
        const double r = num / std::sin(i * th);
        net.relays[2 * i - 1] = {ell, r};  // relays 2i and 2i+1
        net.relays[2 * i] = {ell, r};
    }
    return net;
}

DiamondNetwork worst_odd_type1(int n, double L) {
    require_odd(n, "worst_odd_type1");
    require_L(L, "worst_odd_type1");
    const double th = theta_for(n);
    const int k = (n - 1) / 2;
    DiamondNetwork net;
    net.relays.resize(n);
    net.relays[0] = {1.0, L};
    for (int i = 1; i <= k; ++i) {
        const double num = std::sin(i * th) + std::sin((i + 1) * th);
        const double ell = num / std::sin((i + 1) * th);
        const double r = num / std::sin(i * th);
        net.relays[2 * i - 1] = {ell, r};  // relays 2i and 2i+1
        net.relays[2 * i] = {ell, r};
    }
    return net;
}

DiamondNetwork worst_odd_type2(int n, double L) {
    require_odd(n, "worst_odd_type2");
    require_L(L, "worst_odd_type2");
    const double th = theta_for(n);
    const int k = (n - 1) / 2;
    DiamondNetwork net;
    net.relays.resize(n);
    for (int i = 1; i <= k; ++i) {
        const double num = 2.0 * std::sin(th) * std::sin(i * th);
        const double ell = num / (std::cos(i * th) - std::cos((i + 1) * th));
        const double r = num / (std::cos((i - 1) * th) - std::cos(i * th));
        net.relays[2 * i - 2] = {ell, r};
        net.relays[2 * i - 1] = {ell, r};
    }
    net.relays[n - 1] = {L, 1.0};
    return net;
}

DiamondNetwork worst_network(FamilyId family, int n, double L) {
    switch (family) {
        case FamilyId::Even1: return worst_even_type1(n);
        case FamilyId::Even2: return worst_even_type2(n, L);
        case FamilyId::Odd1: return worst_odd_type1(n, L);
        case FamilyId::Odd2: return worst_odd_type2(n, L);
    }
    throw std::invalid_argument("worst_network: unknown family");
}

Schedule canonical_schedule(FamilyId family, int n) {
    Schedule sched;
    sched.n = n;
    StateMask so = 0, se = 0;
    switch (family) {
        case FamilyId::Even1: {
            require_even(n, "canonical_schedule");
            so = mask_of_odds(1, n - 1);
            se = mask_of_evens(n);
            break;
        }
        case FamilyId::Even2: {
            require_even(n, "canonical_schedule");
            so = mask_of_odds(3, n - 1) | (1u << (n - 1));  // {3,5,...,2k-1} + relay n
            se = mask_of_evens(n);
            break;
        }
        case FamilyId::Odd1: {
            require_odd(n, "canonical_schedule");
            so = mask_of_odds(3, n);  // relay 1 always receiving
            se = mask_of_evens(n - 1);
            break;
        }
        case FamilyId::Odd2: {
            require_odd(n, "canonical_schedule");
            so = mask_of_odds(1, n);
            se = mask_of_evens(n - 1) | (1u << (n - 1));  // relay n always transmitting
            break;
        }
    }
    sched.weights[so] += 0.5;
    sched.weights[se] += 0.5;  // n=2 even2 degenerates to a single state
    return sched;
}

TightnessReport verify_tightness(FamilyId family, int n, double L, double tol) {
    if (n > kMaxRelays) {
        throw std::invalid_argument("verify_tightness: n must be <= 12 for the LP check");
    }
    TightnessReport report;
    report.n = n;
    report.family = family;
    report.L = (family == FamilyId::Even1) ? 0.0 : L;
    report.tol = tol;

    const DiamondNetwork net = worst_network(family, n, L);
    const CapacityResult cap = approximate_capacity(net);
    report.c1 = best_relay(net).second;
    report.cn = cap.value;
    report.two_state_rate = schedule_rate(net, canonical_schedule(family, n));
    report.upper_bound = trivial_upper_bound(net);
    report.bound_n = bound(n);
    report.achieved_ratio = detail::snap_ratio(report.c1, report.cn);
    report.gap = std::fabs(report.achieved_ratio - report.bound_n);
    report.pass = report.gap <= tol;
    return report;
}

}  // namespace hdcap
