// Monte-Carlo study of the best-relay ratio under Rayleigh fading.
//
// Reproducibility contract: every trial draws from its own generator,
// an mt19937_64 seeded with splitmix64 applied to (seed, n, trial). Trials
// therefore produce identical results whether they run serially or fanned
// out across threads, and the CSV output is byte-identical for a fixed seed.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hdcap/network.hpp"

namespace hdcap {

struct RatioStats {
    int n = 0;
    long trials = 0;
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
    double whisker_lo = 0.0;  // furthest observation within 1.5*IQR below q25
    double whisker_hi = 0.0;  // furthest observation within 1.5*IQR above q75
    long outlier_count = 0;
    double worst_case_bound = 0.0;
    long resampled = 0;  // degenerate draws replaced (expected 0)
};

struct RatioRecord {
    int n = 0;
    long trial = 0;
    double ratio = 0.0;
};

struct MonteCarloResult {
    std::vector<RatioStats> stats;
    std::vector<RatioRecord> raw;  // filled when keep_raw, ordered by (n, trial)
};

// Per-trial generator; see the header comment for the derivation chain.
std::mt19937_64 trial_stream(std::uint64_t seed, int n, long trial);

// Uniform in [0,1) from the top 53 bits, pinned independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng);

// Rayleigh(sigma) draw: sigma * sqrt(-2 ln(1-U)). E[X^2] = 2 sigma^2.
double rayleigh(std::mt19937_64& rng, double sigma);

// Draws |h_s|, |h_d| i.i.d. Rayleigh(sigma) per relay, in relay order, and
// converts to link capacities.
DiamondNetwork sample_rayleigh_network(int n, double sigma, std::mt19937_64& rng);

// Linear interpolation between closest ranks ("type 7"): index = (len-1)*p/100.
double percentile(const std::vector<double>& sorted_values, double p);

// Box-plot summary; whiskers sit on the furthest observations within 1.5*IQR
// of the box edges (clamped to the box when everything further is an outlier).
RatioStats summarize_ratios(int n, std::vector<double> ratios, double worst_case_bound);

MonteCarloResult monte_carlo(const std::vector<int>& n_list, long trials, std::uint64_t seed,
                             bool keep_raw = false, bool parallel = true, double sigma = 1.0);

std::string stats_csv(const MonteCarloResult& result, std::uint64_t seed, double sigma);
std::string raw_csv(const MonteCarloResult& result);

}  // namespace hdcap
