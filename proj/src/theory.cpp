#include "hdcap/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hdcap {

namespace {

constexpr double kPi = std::numbers::pi;

bool beta1_is_zero(BoundaryCase c) {
    return c == BoundaryCase::ZeroFinite || c == BoundaryCase::ZeroInfinite;
}

bool betam_is_infinite(BoundaryCase c) {
    return c == BoundaryCase::PositiveInfinite || c == BoundaryCase::ZeroInfinite;
}

}  // namespace

const char* to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::PositiveFinite: return "beta1>0,betam<inf";
        case BoundaryCase::PositiveInfinite: return "beta1>0,betam=inf";
        case BoundaryCase::ZeroFinite: return "beta1=0,betam<inf";
        case BoundaryCase::ZeroInfinite: return "beta1=0,betam=inf";
    }
    return "unknown";
}

double bound(int n) {
    if (n < 1) throw std::invalid_argument("bound: n must be >= 1");
    return 1.0 / (2.0 + 2.0 * std::cos(2.0 * kPi / (n + 2.0)));
}

double opt4(int n) {
    if (n < 1) throw std::invalid_argument("opt4: n must be >= 1");
    return 2.0 + 2.0 * std::cos(2.0 * kPi / (n + 2.0));
}

double sigma_nm(int m, BoundaryCase c) {
    if (m < 1) throw std::invalid_argument("sigma_nm: m must be >= 1");
    switch (c) {
        case BoundaryCase::PositiveFinite: return 2.0 * std::cos(2.0 * kPi / (2.0 * m + 2.0));
        case BoundaryCase::PositiveInfinite: return 2.0 * std::cos(2.0 * kPi / (2.0 * m + 1.0));
        case BoundaryCase::ZeroFinite: return 2.0 * std::cos(2.0 * kPi / (2.0 * m + 1.0));
        case BoundaryCase::ZeroInfinite: return 2.0 * std::cos(2.0 * kPi / (2.0 * m));
    }
    throw std::invalid_argument("sigma_nm: unknown case");
}

int max_m(int n, BoundaryCase c) {
    if (n < 1) throw std::invalid_argument("max_m: n must be >= 1");
    switch (c) {
        case BoundaryCase::PositiveFinite: return n / 2;
        case BoundaryCase::PositiveInfinite: return (n + 1) / 2;
        case BoundaryCase::ZeroFinite: return (n + 1) / 2;
        case BoundaryCase::ZeroInfinite: return (n + 2) / 2;
    }
    throw std::invalid_argument("max_m: unknown case");
}

std::pair<std::complex<double>, std::complex<double>> characteristic_roots(double sigma) {
    if (sigma == 2.0 || sigma == -2.0) {
        throw std::domain_error("characteristic_roots: sigma = +-2 gives a repeated root");
    }
    const std::complex<double> disc(sigma * sigma - 4.0, 0.0);
    const std::complex<double> s = std::sqrt(disc);
    return {(sigma + s) / 2.0, (sigma - s) / 2.0};
}

RecurrenceSolution recurrence_solution(int m, BoundaryCase c) {
    if (m < 1) throw std::invalid_argument("recurrence_solution: m must be >= 1");
    const double sigma = sigma_nm(m, c);
    auto [U, V] = characteristic_roots(sigma);  // throws for the void case m=1, beta1=0, betam=inf

    RecurrenceSolution out;
    out.sigma = sigma;
    out.root_u = U;
    out.root_v = V;
    if (beta1_is_zero(c)) {
        // b_0 = 0, b_1 = 1
        const std::complex<double> s = U - V;  // sqrt(sigma^2 - 4)
        out.coeff_u = 1.0 / s;
        out.coeff_v = -out.coeff_u;
    } else {
        // b_0 = 1, b_1 = sigma + 1
        out.coeff_u = (U - 1.0) / (sigma - 2.0);
        out.coeff_v = (V - 1.0) / (sigma - 2.0);
    }

    // Real recurrence...
    out.b.resize(m + 1);
    out.b[0] = beta1_is_zero(c) ? 0.0 : 1.0;
    if (m >= 1) out.b[1] = beta1_is_zero(c) ? 1.0 : sigma + 1.0;
    for (int i = 2; i <= m; ++i) out.b[i] = sigma * out.b[i - 1] - out.b[i - 2];

    // ...cross-checked against the complex closed form.
    std::complex<double> Upow(1.0, 0.0), Vpow(1.0, 0.0);
    for (int i = 0; i <= m; ++i) {
        const std::complex<double> closed = out.coeff_u * Upow + out.coeff_v * Vpow;
        if (std::fabs(closed.imag()) > 1e-9) {
            throw std::runtime_error("recurrence_solution: closed form is not real");
        }
        if (std::fabs(closed.real() - out.b[i]) > 1e-9 * std::max(1.0, std::fabs(out.b[i]))) {
            throw std::runtime_error("recurrence_solution: closed form disagrees with recurrence");
        }
        Upow *= U;
        Vpow *= V;
    }

    // Terminal condition.
    if (betam_is_infinite(c)) {
        if (std::fabs(out.b[m]) > 1e-8) {
            throw std::runtime_error("recurrence_solution: b_m must vanish for infinite beta_m");
        }
    } else {
        const double residual = out.b[m - 1] - (sigma + 1.0) * out.b[m];
        if (std::fabs(residual) > 1e-8 * std::max(1.0, std::fabs(out.b[m - 1]))) {
            throw std::runtime_error("recurrence_solution: terminal ratio b_{m-1}/b_m != sigma + 1");
        }
    }
    return out;
}

BetaProfile beta_profile(int n, int m, BoundaryCase c) {
    if (m < 1 || m > max_m(n, c)) {
        throw std::invalid_argument("beta_profile: m out of range for n=" + std::to_string(n));
    }
    RecurrenceSolution rec = recurrence_solution(m, c);

    BetaProfile profile;
    profile.m = m;
    profile.boundary_case = c;
    profile.betas.reserve(m);
    for (int i = 1; i <= m; ++i) {
        if (i == m && betam_is_infinite(c)) {
            profile.betas.push_back(ExtendedReal::infinity());
        } else {
            profile.betas.push_back(ExtendedReal::finite(rec.b[i - 1] / rec.b[i]));
        }
    }
    // Strict increase; only beta_1 may be zero, only beta_m infinite.
    for (int i = 0; i < m; ++i) {
        if (profile.betas[i].infinite) continue;
        if (profile.betas[i].value < 0.0) {
            throw std::runtime_error("beta_profile: negative beta");
        }
        if (i + 1 < m && !profile.betas[i + 1].infinite &&
            !(profile.betas[i].value < profile.betas[i + 1].value)) {
            throw std::runtime_error("beta_profile: betas not strictly increasing");
        }
    }

    // Minimal group sizes: a positive finite beta_1 needs two members, an
    // infinite last group only one, interior groups two each.
    std::vector<int> mins(m, 2);
    if (beta1_is_zero(c)) mins[0] = 1;
    if (betam_is_infinite(c)) mins[m - 1] = 1;
    int total = 0;
    for (int v : mins) total += v;
    if (total > n) throw std::logic_error("beta_profile: group minima exceed n");

    profile.boundaries.resize(m);
    int acc = 0;
    for (int i = 0; i < m; ++i) {
        acc += mins[i];
        profile.boundaries[i] = acc;
    }
    profile.boundaries[m - 1] = n;  // slack goes to the last group
    return profile;
}

std::vector<ExtendedReal> G_values(const BetaProfile& profile) {
    const int m = profile.m;
    std::vector<ExtendedReal> g;
    g.reserve(m + 1);

    const ExtendedReal& b1 = profile.betas.front();
    if (b1.infinite) {
        g.push_back(ExtendedReal::finite(1.0));  // 1 + 1/inf
    } else if (b1.value == 0.0) {
        g.push_back(ExtendedReal::infinity());
    } else {
        g.push_back(ExtendedReal::finite(1.0 + 1.0 / b1.value));
    }
    for (int i = 1; i < m; ++i) {
        const ExtendedReal& bi = profile.betas[i - 1];
        const ExtendedReal& bnext = profile.betas[i];
        // interior betas are finite; a zero successor cannot occur past beta_1
        const double recip = bnext.infinite ? 0.0 : 1.0 / bnext.value;
        g.push_back(ExtendedReal::finite(2.0 + bi.value + recip));
    }
    const ExtendedReal& bm = profile.betas.back();
    if (m >= 1) {
        g.push_back(bm.infinite ? ExtendedReal::infinity() : ExtendedReal::finite(1.0 + bm.value));
    }
    return g;
}

std::vector<std::pair<int, BoundaryCase>> opt4_attainers(int n) {
    const double target = opt4(n) - 2.0;
    std::vector<std::pair<int, BoundaryCase>> out;
    for (BoundaryCase c : kAllBoundaryCases) {
        const int m = max_m(n, c);
        if (m < 1) continue;
        if (c == BoundaryCase::ZeroInfinite && m == 1) continue;  // void: needs both endpoints
        if (std::fabs(sigma_nm(m, c) - target) <= 1e-12) out.push_back({m, c});
    }
    return out;
}

}  // namespace hdcap
