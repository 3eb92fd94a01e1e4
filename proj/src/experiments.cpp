#include "hdcap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hdcap/capacity.hpp"
#include "hdcap/format.hpp"
#include "hdcap/theory.hpp"

namespace hdcap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 trial_stream(std::uint64_t seed, int n, long trial) {
    std::uint64_t key = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n)));
    key = splitmix64(key ^ static_cast<std::uint64_t>(trial));
    return std::mt19937_64(key);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double rayleigh(std::mt19937_64& rng, double sigma) {
    const double u = uniform01(rng);
    return sigma * std::sqrt(-2.0 * std::log1p(-u));
}

DiamondNetwork sample_rayleigh_network(int n, double sigma, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_rayleigh_network: n must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("sample_rayleigh_network: sigma must be > 0");
    DiamondNetwork net;
    net.relays.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double hs = rayleigh(rng, sigma);
        const double hd = rayleigh(rng, sigma);
        net.relays.push_back(links_from_gains(hs, hd));
    }
    return net;
}

double percentile(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) throw std::invalid_argument("percentile: empty input");
    if (p < 0.0 || p > 100.0) throw std::invalid_argument("percentile: p must be in [0,100]");
    const double idx = (static_cast<double>(sorted_values.size()) - 1.0) * p / 100.0;
    const std::size_t lo = static_cast<std::size_t>(idx);
    const double frac = idx - static_cast<double>(lo);
    if (lo + 1 >= sorted_values.size()) return sorted_values.back();
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

RatioStats summarize_ratios(int n, std::vector<double> ratios, double worst_case_bound) {
    if (ratios.empty()) throw std::invalid_argument("summarize_ratios: empty input");
    std::sort(ratios.begin(), ratios.end());

    RatioStats s;
    s.n = n;
    s.trials = static_cast<long>(ratios.size());
    s.min = ratios.front();
    s.max = ratios.back();
    s.q25 = percentile(ratios, 25.0);
    s.median = percentile(ratios, 50.0);
    s.q75 = percentile(ratios, 75.0);
    s.worst_case_bound = worst_case_bound;

    const double iqr = s.q75 - s.q25;
    const double fence_lo = s.q25 - 1.5 * iqr;
    const double fence_hi = s.q75 + 1.5 * iqr;
    s.whisker_lo = s.q25;
    s.whisker_hi = s.q75;
    for (double v : ratios) {
        if (v >= fence_lo) {
            s.whisker_lo = std::min(s.q25, v);
            break;
        }
    }
    for (auto it = ratios.rbegin(); it != ratios.rend(); ++it) {
        if (*it <= fence_hi) {
            s.whisker_hi = std::max(s.q75, *it);
            break;
        }
    }
    for (double v : ratios) {
        if (v < fence_lo || v > fence_hi) ++s.outlier_count;
    }
    return s;
}

MonteCarloResult monte_carlo(const std::vector<int>& n_list, long trials, std::uint64_t seed,
                             bool keep_raw, bool parallel, double sigma) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    for (int n : n_list) {
        if (n < 1 || n > 10) {
            throw std::invalid_argument("monte_carlo: n must lie in [1:10]");
        }
    }

    MonteCarloResult result;
    for (int n : n_list) {
        std::vector<double> ratios(trials);
        std::vector<long> resamples(trials, 0);
        std::exception_ptr first_error;

#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long trial = 0; trial < trials; ++trial) {
            try {
                std::mt19937_64 rng = trial_stream(seed, n, trial);
                // Degenerate draws (zero capacity) have probability zero under
                // Rayleigh fading; redraw from the same stream if one occurs.
                for (;;) {
                    DiamondNetwork net = sample_rayleigh_network(n, sigma, rng);
                    const double c1 = best_relay(net).second;
                    if (c1 > 0.0) {
                        const double cn = approximate_capacity(net).value;
                        if (cn > 0.0) {
                            ratios[trial] = detail::snap_ratio(c1, cn);
                            break;
                        }
                    }
                    ++resamples[trial];
                }
            } catch (...) {
                // solver errors must propagate, not kill the worker team
#pragma omp critical(hdcap_mc_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);

        RatioStats stats = summarize_ratios(n, ratios, bound(n));
        for (long c : resamples) stats.resampled += c;
        result.stats.push_back(stats);
        if (keep_raw) {
            for (long trial = 0; trial < trials; ++trial) {
                result.raw.push_back({n, trial, ratios[trial]});
            }
        }
    }
    return result;
}

std::string stats_csv(const MonteCarloResult& result, std::uint64_t seed, double sigma) {
    std::ostringstream os;
    os << "# hdcap montecarlo seed=" << seed << " sigma=" << fmt9(sigma)
       << " rng=mt19937_64(splitmix64(seed,n,trial))\n";
    os << "n,trials,min,q25,median,q75,max,whisker_lo,whisker_hi,outliers,bound\n";
    for (const auto& s : result.stats) {
        os << s.n << ',' << s.trials << ',' << fmt9(s.min) << ',' << fmt9(s.q25) << ','
           << fmt9(s.median) << ',' << fmt9(s.q75) << ',' << fmt9(s.max) << ','
           << fmt9(s.whisker_lo) << ',' << fmt9(s.whisker_hi) << ',' << s.outlier_count << ','
           << fmt9(s.worst_case_bound) << '\n';
    }
    return os.str();
}

std::string raw_csv(const MonteCarloResult& result) {
    std::ostringstream os;
    os << "n,trial,ratio\n";
    for (const auto& rec : result.raw) {
        os << rec.n << ',' << rec.trial << ',' << fmt9(rec.ratio) << '\n';
    }
    return os.str();
}

}  // namespace hdcap
