// Closed-form machinery behind the worst-case single-relay ratio
// 1 / (2 + 2 cos(2 pi / (n+2))).
//
// On unit-capacity networks the extremal z-profile takes m distinct values
// beta_1 < ... < beta_m in groups; the group objective sigma_{n,m} solves the
// order-2 recurrence b_{i+1} - sigma b_i + b_{i-1} = 0 whose characteristic
// roots lie on the unit circle, giving the cosine forms below. Four boundary
// cases arise from beta_1 = 0 vs > 0 and beta_m finite vs infinite.
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace hdcap {

enum class BoundaryCase {
    PositiveFinite,    // beta_1 > 0, beta_m < inf
    PositiveInfinite,  // beta_1 > 0, beta_m = inf
    ZeroFinite,        // beta_1 = 0, beta_m < inf
    ZeroInfinite,      // beta_1 = 0, beta_m = inf
};

inline constexpr BoundaryCase kAllBoundaryCases[] = {
    BoundaryCase::PositiveFinite, BoundaryCase::PositiveInfinite, BoundaryCase::ZeroFinite,
    BoundaryCase::ZeroInfinite};

const char* to_string(BoundaryCase c);

// Finite value or a distinguished infinity; infinity never enters arithmetic.
struct ExtendedReal {
    double value = 0.0;
    bool infinite = false;

    static ExtendedReal finite(double v) { return {v, false}; }
    static ExtendedReal infinity() { return {0.0, true}; }
};

// Worst-case guarantee for the best single relay: 1/(2 + 2 cos(2 pi/(n+2))).
double bound(int n);

// 2 + 2 cos(2 pi/(n+2)); the largest capacity a unit-capacity network can
// have, and the reciprocal of bound(n).
double opt4(int n);

// Group objective for m groups in the given boundary case.
double sigma_nm(int m, BoundaryCase c);

// Largest admissible group count for n relays in the given case; 0 when no
// valid m exists.
int max_m(int n, BoundaryCase c);

// Roots of X^2 - sigma X + 1 = 0. U*V = 1 and U + V = sigma; sigma = +-2
// would give a repeated root, for which the recurrence ansatz breaks down.
std::pair<std::complex<double>, std::complex<double>> characteristic_roots(double sigma);

struct RecurrenceSolution {
    double sigma = 0.0;
    std::complex<double> root_u, root_v;    // U, V
    std::complex<double> coeff_u, coeff_v;  // u, v with b_i = u U^i + v V^i
    std::vector<double> b;                  // b_0..b_m, real parts of the closed form
};

// Solves the b-recurrence for the case's initial conditions and verifies the
// terminal condition (b_m = 0 for infinite beta_m, else b_{m-1}/b_m = sigma+1).
// The closed form and the real recurrence are computed independently and
// cross-checked.
RecurrenceSolution recurrence_solution(int m, BoundaryCase c);

struct BetaProfile {
    int m = 0;
    std::vector<ExtendedReal> betas;  // beta_1..beta_m, strictly increasing
    std::vector<int> boundaries;      // t_1..t_m with t_m = n
    BoundaryCase boundary_case = BoundaryCase::PositiveFinite;
};

// beta_i = b_{i-1}/b_i with the case's boundary values forced; group
// boundaries take their minimal admissible sizes left to right with the slack
// in the last group.
BetaProfile beta_profile(int n, int m, BoundaryCase c);

// G_0 = 1 + 1/beta_1, G_i = 2 + beta_i + 1/beta_{i+1}, G_m = 1 + beta_m.
// At the optimum every finite G equals sigma_nm + 2.
std::vector<ExtendedReal> G_values(const BetaProfile& profile);

// All (m, case) pairs whose sigma attains max_m-optimal opt4(n) - 2.
std::vector<std::pair<int, BoundaryCase>> opt4_attainers(int n);

}  // namespace hdcap
