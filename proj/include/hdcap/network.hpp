// Diamond network model: per-relay link-capacity pairs, validation,
// relabeling, scaling, and the unit single-relay-capacity normalization.
//
// Everything is templated on the scalar type so the same operations run in
// 64-bit floats (the default) or exact rationals (hdcap::Rational).
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hdcap/rational.hpp"

namespace hdcap {

// Point-to-point link capacities of one relay, in bits per channel use.
template <class T>
struct BasicRelayLinks {
    T ell{};  // source -> relay
    T r{};    // relay -> destination
};

template <class T>
struct BasicDiamondNetwork {
    std::vector<BasicRelayLinks<T>> relays;

    BasicDiamondNetwork() = default;
    explicit BasicDiamondNetwork(std::vector<BasicRelayLinks<T>> rl) : relays(std::move(rl)) {}

    int size() const { return static_cast<int>(relays.size()); }
};

// A network rescaled so every single-relay capacity equals one, sorted by ell.
// z[i] = ell[i] - 1 with r[i] = 1 + 1/z[i]; z is positive and non-decreasing.
template <class T>
struct BasicNormalizedNetwork {
    BasicDiamondNetwork<T> network;
    std::vector<T> z;
};

using RelayLinks = BasicRelayLinks<double>;
using DiamondNetwork = BasicDiamondNetwork<double>;
using NormalizedNetwork = BasicNormalizedNetwork<double>;

// ell = log2(1 + |h_s|^2), r = log2(1 + |h_d|^2). Capacities are in bits per
// channel use throughout; ratios of capacities do not depend on the log base.
inline RelayLinks links_from_gains(double h_s_mag, double h_d_mag) {
    if (!std::isfinite(h_s_mag) || !std::isfinite(h_d_mag) || h_s_mag < 0 || h_d_mag < 0) {
        throw std::invalid_argument("links_from_gains: gain magnitudes must be finite and >= 0");
    }
    return RelayLinks{std::log2(1.0 + h_s_mag * h_s_mag), std::log2(1.0 + h_d_mag * h_d_mag)};
}

// Returns every invariant violation; an empty list means the network is valid.
template <class T>
std::vector<std::string> validate(const BasicDiamondNetwork<T>& net) {
    std::vector<std::string> errors;
    if (net.relays.empty()) {
        errors.push_back("empty network");
        return errors;
    }
    for (int i = 0; i < net.size(); ++i) {
        const auto& rl = net.relays[i];
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(rl.ell) || !std::isfinite(rl.r)) {
                errors.push_back("non-finite capacity at relay " + std::to_string(i + 1));
                continue;
            }
        }
        if (rl.ell < 0 || rl.r < 0) {
            errors.push_back("negative capacity at relay " + std::to_string(i + 1));
        }
    }
    return errors;
}

template <class T>
void require_valid(const BasicDiamondNetwork<T>& net) {
    auto errors = validate(net);
    if (errors.empty()) return;
    std::ostringstream os;
    os << "invalid network:";
    for (const auto& e : errors) os << " " << e << ";";
    throw std::invalid_argument(os.str());
}

// ell*r/(ell+r); zero when both links are zero (the limiting value).
template <class T>
T single_relay_capacity(const BasicRelayLinks<T>& link) {
    if (link.ell == 0 && link.r == 0) return T(0);
    return link.ell * link.r / (link.ell + link.r);
}

// 0-based index and value of the relay with the largest single-relay capacity;
// ties go to the lowest index.
template <class T>
std::pair<int, T> best_relay(const BasicDiamondNetwork<T>& net) {
    require_valid(net);
    int best = 0;
    T best_value = single_relay_capacity(net.relays[0]);
    for (int i = 1; i < net.size(); ++i) {
        T v = single_relay_capacity(net.relays[i]);
        if (v > best_value) {
            best = i;
            best_value = v;
        }
    }
    return {best, best_value};
}

template <class T>
BasicDiamondNetwork<T> scale(const BasicDiamondNetwork<T>& net, const T& alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("scale: alpha must be > 0");
    BasicDiamondNetwork<T> out = net;
    for (auto& rl : out.relays) {
        rl.ell = rl.ell * alpha;
        rl.r = rl.r * alpha;
    }
    return out;
}

// Stable sort by ell; perm[new_index] = old_index (0-based).
template <class T>
std::pair<BasicDiamondNetwork<T>, std::vector<int>> sort_by_ell(const BasicDiamondNetwork<T>& net) {
    require_valid(net);
    std::vector<int> perm(net.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return net.relays[a].ell < net.relays[b].ell; });
    BasicDiamondNetwork<T> out;
    out.relays.reserve(net.size());
    for (int idx : perm) out.relays.push_back(net.relays[idx]);
    return {std::move(out), std::move(perm)};
}

// Rescales each relay so its single-relay capacity becomes one, then sorts by
// ell. Per-relay scaling by best/C1(i) followed by a global 1/best reduces to
// scaling relay i by 1/C1(i), which is what is computed here.
template <class T>
BasicNormalizedNetwork<T> normalize(const BasicDiamondNetwork<T>& net) {
    require_valid(net);
    BasicDiamondNetwork<T> scaled;
    scaled.relays.reserve(net.size());
    for (int i = 0; i < net.size(); ++i) {
        T c = single_relay_capacity(net.relays[i]);
        if (c == 0) {
            throw std::domain_error("normalize: relay " + std::to_string(i + 1) +
                                    " is dead (zero single-relay capacity)");
        }
        scaled.relays.push_back({net.relays[i].ell / c, net.relays[i].r / c});
    }
    auto [sorted, perm] = sort_by_ell(scaled);
    (void)perm;

    BasicNormalizedNetwork<T> out;
    out.z.reserve(net.size());
    for (int i = 0; i < sorted.size(); ++i) {
        T c = single_relay_capacity(sorted.relays[i]);
        if constexpr (scalar_traits<T>::exact) {
            if (c != 1) throw std::logic_error("normalize: exact unit capacity violated");
        } else {
            if (std::fabs(to_double(c) - 1.0) > 1e-12) {
                throw std::logic_error("normalize: unit capacity violated beyond 1e-12");
            }
        }
        out.z.push_back(sorted.relays[i].ell - T(1));
        if (!(out.z.back() > 0)) {
            throw std::logic_error("normalize: z must be strictly positive for finite links");
        }
    }
    out.network = std::move(sorted);
    return out;
}

}  // namespace hdcap
