#include "hdcap/simplex.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hdcap/pivot_kernel.hpp"

namespace hdcap {

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

// Standard-form tableau. Rows 0..nrows-1 are the constraints (equations with
// rhs >= 0 after sign normalization); row nrows holds the phase-2 reduced
// costs and row nrows+1 the phase-1 reduced costs. The last slot of each row
// is the rhs (minus the running objective value for the objective rows).
//
// Rows and structural columns are equilibrated by powers of two before the
// slack/artificial columns are attached, so the absolute tolerances below act
// on O(1) data even when the input spans many orders of magnitude. Power-of-
// two scaling is exact in both scalar modes; primal, dual and objective values
// are mapped back to original units on extraction.
template <class T>
struct Tableau {
    long nrows = 0;
    long ncols = 0;
    long width = 0;  // ncols + 1
    std::vector<T> data;
    std::vector<int> basis;           // basis[r] = basic column of row r
    std::vector<char> is_basic;       // per column
    std::vector<char> is_artificial;  // per column
    std::vector<int> plus_col, minus_col;
    std::vector<int> aux_col;           // per row: artificial if present, else slack
    std::vector<signed char> row_sign;  // -1 if the row was negated to make rhs >= 0
    std::vector<T> row_scale;           // per row: divisor applied to the row
    std::vector<T> col_scale;           // per original variable: divisor on its column
    bool have_artificials = false;

    long obj_row() const { return nrows; }
    long p1_row() const { return nrows + 1; }
    T& at(long r, long c) { return data[r * width + c]; }
    const T& at(long r, long c) const { return data[r * width + c]; }
    T& rhs(long r) { return data[r * width + ncols]; }
    const T& rhs(long r) const { return data[r * width + ncols]; }
};

// Nearest power of two, as an exactly representable scalar.
template <class T>
T pow2_near(double magnitude) {
    if (!(magnitude > 0.0) || !std::isfinite(magnitude)) return T(1);
    const double p = std::exp2(std::round(std::log2(magnitude)));
    if constexpr (scalar_traits<T>::exact) {
        return rational_from_double(p);
    } else {
        return p;
    }
}

template <class T>
void validate_shape(const LinearProgram<T>& lp) {
    const std::size_t n = lp.num_vars();
    if (n == 0) throw std::invalid_argument("simplex: empty objective");
    if (!lp.signs.empty() && lp.signs.size() != n) {
        throw std::invalid_argument("simplex: signs size mismatch");
    }
    if (lp.ineq_coeffs.size() != lp.ineq_rhs.size() || lp.eq_coeffs.size() != lp.eq_rhs.size()) {
        throw std::invalid_argument("simplex: rhs size mismatch");
    }
    auto check_rows = [&](const std::vector<std::vector<T>>& rows) {
        for (const auto& row : rows) {
            if (row.size() != n) throw std::invalid_argument("simplex: row width mismatch");
            if constexpr (!scalar_traits<T>::exact) {
                for (const T& v : row) {
                    if (!std::isfinite(v)) throw std::invalid_argument("simplex: non-finite coefficient");
                }
            }
        }
    };
    check_rows(lp.ineq_coeffs);
    check_rows(lp.eq_coeffs);
    if constexpr (!scalar_traits<T>::exact) {
        for (const T& v : lp.objective) {
            if (!std::isfinite(v)) throw std::invalid_argument("simplex: non-finite objective");
        }
        for (const T& v : lp.ineq_rhs) {
            if (!std::isfinite(v)) throw std::invalid_argument("simplex: non-finite rhs");
        }
        for (const T& v : lp.eq_rhs) {
            if (!std::isfinite(v)) throw std::invalid_argument("simplex: non-finite rhs");
        }
    }
}

template <class T>
Tableau<T> build_tableau(const LinearProgram<T>& lp) {
    const long nvars = static_cast<long>(lp.num_vars());
    const long m_ineq = static_cast<long>(lp.ineq_coeffs.size());
    const long m_eq = static_cast<long>(lp.eq_coeffs.size());

    Tableau<T> tb;
    tb.nrows = m_ineq + m_eq;
    tb.plus_col.resize(nvars);
    tb.minus_col.assign(nvars, -1);
    long col = 0;
    for (long j = 0; j < nvars; ++j) {
        tb.plus_col[j] = static_cast<int>(col++);
        if (lp.sign(j) == VarSign::Free) tb.minus_col[j] = static_cast<int>(col++);
    }
    const long slack0 = col;
    col += m_ineq;
    std::vector<long> art_col(tb.nrows, -1);
    for (long i = 0; i < m_ineq; ++i) {
        if (lp.ineq_rhs[i] < 0) art_col[i] = col++;
    }
    for (long k = 0; k < m_eq; ++k) art_col[m_ineq + k] = col++;

    tb.ncols = col;
    tb.width = col + 1;
    tb.data.assign(static_cast<std::size_t>(tb.nrows + 2) * tb.width, T(0));
    tb.is_basic.assign(tb.ncols, 0);
    tb.is_artificial.assign(tb.ncols, 0);
    tb.basis.assign(tb.nrows, -1);
    tb.aux_col.assign(tb.nrows, -1);
    tb.row_sign.assign(tb.nrows, +1);
    tb.row_scale.assign(tb.nrows, T(1));
    tb.col_scale.assign(nvars, T(1));

    auto row_of = [&](long r) -> const std::vector<T>& {
        return r < m_ineq ? lp.ineq_coeffs[r] : lp.eq_coeffs[r - m_ineq];
    };
    for (long r = 0; r < tb.nrows; ++r) {
        double mx = 0.0;
        for (const T& v : row_of(r)) mx = std::max(mx, std::fabs(to_double(v)));
        tb.row_scale[r] = pow2_near<T>(mx);
    }
    for (long j = 0; j < nvars; ++j) {
        double mx = 0.0;
        for (long r = 0; r < tb.nrows; ++r) {
            mx = std::max(mx, std::fabs(to_double(row_of(r)[j] / tb.row_scale[r])));
        }
        tb.col_scale[j] = pow2_near<T>(mx);
    }

    auto fill_row = [&](long r, const std::vector<T>& a, const T& b, long slack) {
        const signed char s = (b < 0) ? -1 : +1;
        tb.row_sign[r] = s;
        for (long j = 0; j < nvars; ++j) {
            if (a[j] == 0) continue;
            T v = a[j] / (tb.row_scale[r] * tb.col_scale[j]);
            if (s < 0) v = -v;
            if (tb.minus_col[j] >= 0) tb.at(r, tb.minus_col[j]) = -v;
            tb.at(r, tb.plus_col[j]) = v;
        }
        if (slack >= 0) tb.at(r, slack) = (s < 0) ? T(-1) : T(1);
        T rb = b / tb.row_scale[r];
        tb.rhs(r) = (s < 0) ? T(-rb) : rb;
        if (art_col[r] >= 0) {
            tb.at(r, art_col[r]) = T(1);
            tb.is_artificial[art_col[r]] = 1;
            tb.basis[r] = static_cast<int>(art_col[r]);
            tb.aux_col[r] = static_cast<int>(art_col[r]);
            tb.have_artificials = true;
        } else {
            tb.basis[r] = static_cast<int>(slack);
            tb.aux_col[r] = static_cast<int>(slack);
        }
        tb.is_basic[tb.basis[r]] = 1;
    };
    for (long i = 0; i < m_ineq; ++i) fill_row(i, lp.ineq_coeffs[i], lp.ineq_rhs[i], slack0 + i);
    for (long k = 0; k < m_eq; ++k) fill_row(m_ineq + k, lp.eq_coeffs[k], lp.eq_rhs[k], -1);

    // Phase-2 reduced costs start at c: the initial basis has zero cost.
    for (long j = 0; j < nvars; ++j) {
        T cj = lp.objective[j] / tb.col_scale[j];
        tb.at(tb.obj_row(), tb.plus_col[j]) = cj;
        if (tb.minus_col[j] >= 0) tb.at(tb.obj_row(), tb.minus_col[j]) = -cj;
    }
    // Phase-1 objective is max(-sum of artificials); price out the artificial
    // basics by adding their rows, then subtract the unit cost on each
    // artificial column.
    for (long r = 0; r < tb.nrows; ++r) {
        if (art_col[r] < 0) continue;
        for (long c = 0; c < tb.width; ++c) tb.at(tb.p1_row(), c) += tb.at(r, c);
    }
    for (long c = 0; c < tb.ncols; ++c) {
        if (tb.is_artificial[c]) tb.at(tb.p1_row(), c) -= T(1);
    }
    return tb;
}

template <class T>
bool entry_positive(const T& v, double tol) {
    if constexpr (scalar_traits<T>::exact) {
        (void)tol;
        return v > 0;
    } else {
        return v > tol;
    }
}

// Entering column, or -1 when the phase is optimal. Artificial columns never
// re-enter once nonbasic.
template <class T>
long choose_entering(const Tableau<T>& tb, long objrow, bool bland, double tol) {
    long best = -1;
    if constexpr (scalar_traits<T>::exact) {
        (void)tol;
        for (long j = 0; j < tb.ncols; ++j) {
            if (tb.is_basic[j] || tb.is_artificial[j]) continue;
            if (tb.at(objrow, j) > 0) return j;
        }
        return -1;
    } else {
        if (bland) {
            for (long j = 0; j < tb.ncols; ++j) {
                if (tb.is_basic[j] || tb.is_artificial[j]) continue;
                if (tb.at(objrow, j) > tol) return j;
            }
            return -1;
        }
        T best_val = T(tol);
        for (long j = 0; j < tb.ncols; ++j) {
            if (tb.is_basic[j] || tb.is_artificial[j]) continue;
            const T& v = tb.at(objrow, j);
            if (v > best_val) {
                best = j;
                best_val = v;
            }
        }
        return best;
    }
}

// Leaving row by minimum ratio; ties go to the row whose basic variable has
// the smallest index (Bland-compatible, and deterministic in float mode).
template <class T>
long ratio_test(const Tableau<T>& tb, long q, double tol) {
    long best = -1;
    T best_num(0), best_den(1);
    for (long r = 0; r < tb.nrows; ++r) {
        const T& a = tb.at(r, q);
        if (!entry_positive(a, tol)) continue;
        T b = tb.rhs(r);
        if constexpr (!scalar_traits<T>::exact) {
            if (b < 0) b = T(0);  // degenerate roundoff guard
        }
        if (best < 0) {
            best = r;
            best_num = b;
            best_den = a;
            continue;
        }
        // b/a vs best_num/best_den with positive denominators
        T lhs = b * best_den;
        T rhs = best_num * a;
        if (lhs < rhs || (lhs == rhs && tb.basis[r] < tb.basis[best])) {
            best = r;
            best_num = b;
            best_den = a;
        }
    }
    return best;
}

template <class T>
void pivot(Tableau<T>& tb, long r, long q, long active_rows, bool parallel) {
    T p = tb.at(r, q);
    T* row = &tb.data[r * tb.width];
    for (long j = 0; j < tb.width; ++j) {
        if (!(row[j] == 0)) row[j] /= p;
    }
    row[q] = T(1);
    kernel::eliminate_rows(tb.data.data(), active_rows, tb.width, r, q, parallel);
    tb.is_basic[tb.basis[r]] = 0;
    tb.basis[r] = static_cast<int>(q);
    tb.is_basic[q] = 1;
}

}  // namespace

LinearProgram<Rational> to_exact(const LinearProgram<double>& lp) {
    LinearProgram<Rational> out;
    out.objective.reserve(lp.objective.size());
    for (double v : lp.objective) out.objective.push_back(rational_from_double(v));
    auto conv_rows = [](const std::vector<std::vector<double>>& rows) {
        std::vector<std::vector<Rational>> out_rows;
        out_rows.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<Rational> r;
            r.reserve(row.size());
            for (double v : row) r.push_back(rational_from_double(v));
            out_rows.push_back(std::move(r));
        }
        return out_rows;
    };
    out.ineq_coeffs = conv_rows(lp.ineq_coeffs);
    out.eq_coeffs = conv_rows(lp.eq_coeffs);
    for (double v : lp.ineq_rhs) out.ineq_rhs.push_back(rational_from_double(v));
    for (double v : lp.eq_rhs) out.eq_rhs.push_back(rational_from_double(v));
    out.signs = lp.signs;
    return out;
}

template <class T>
LpSolution<T> solve(const LinearProgram<T>& lp, const SimplexOptions& options) {
    validate_shape(lp);
    constexpr bool exact = scalar_traits<T>::exact;
    Tableau<T> tb = build_tableau(lp);

    long pivots = 0;
    const long bland_after = options.bland_after * std::max<long>(1, tb.nrows);
    auto run_phase = [&](long objrow, long active_rows) -> LpStatus {
        while (true) {
            const bool bland = exact || pivots >= bland_after;
            long q = choose_entering(tb, objrow, bland, options.tol);
            if (q < 0) return LpStatus::Optimal;
            long r = ratio_test(tb, q, options.tol);
            if (r < 0) return LpStatus::Unbounded;
            if (++pivots > options.max_pivots) {
                throw std::runtime_error("simplex: pivot limit exceeded");
            }
            pivot(tb, r, q, active_rows, options.parallel);
        }
    };

    LpSolution<T> sol;
    if (tb.have_artificials) {
        LpStatus st = run_phase(tb.p1_row(), tb.nrows + 2);
        if (st != LpStatus::Optimal) {
            throw std::runtime_error("simplex: phase-1 objective unbounded");
        }
        T p1val = -tb.at(tb.p1_row(), tb.ncols);  // = -(sum of artificials)
        const bool feasible = exact ? (p1val == 0) : (to_double(p1val) >= -options.tol);
        if (!feasible) {
            sol.status = LpStatus::Infeasible;
            sol.pivots = pivots;
            return sol;
        }
        // Drive remaining zero-level artificials out of the basis when the row
        // has any nonzero structural entry; otherwise the row is redundant and
        // the artificial stays basic at zero.
        for (long r = 0; r < tb.nrows; ++r) {
            if (!tb.is_artificial[tb.basis[r]]) continue;
            long q = -1;
            for (long j = 0; j < tb.ncols; ++j) {
                if (tb.is_artificial[j] || tb.is_basic[j]) continue;
                const T& a = tb.at(r, j);
                const bool nonzero = exact ? !(a == 0) : std::fabs(to_double(a)) > options.tol;
                if (nonzero) {
                    q = j;
                    break;
                }
            }
            if (q >= 0) {
                ++pivots;
                pivot(tb, r, q, tb.nrows + 2, options.parallel);
            }
        }
    }

    LpStatus st = run_phase(tb.obj_row(), tb.nrows + 1);
    sol.pivots = pivots;
    if (st == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    std::vector<T> xstd(tb.ncols, T(0));
    for (long r = 0; r < tb.nrows; ++r) xstd[tb.basis[r]] = tb.rhs(r);
    const long nvars = static_cast<long>(lp.num_vars());
    sol.primal.assign(nvars, T(0));
    for (long j = 0; j < nvars; ++j) {
        sol.primal[j] = xstd[tb.plus_col[j]];
        if (tb.minus_col[j] >= 0) sol.primal[j] -= xstd[tb.minus_col[j]];
        sol.primal[j] /= tb.col_scale[j];
    }
    sol.value = T(0);
    for (long j = 0; j < nvars; ++j) sol.value += lp.objective[j] * sol.primal[j];

    // Row multipliers from the reduced cost of each row's identity column,
    // mapped back through the sign normalization and the row scaling.
    sol.dual.assign(tb.nrows, T(0));
    for (long r = 0; r < tb.nrows; ++r) {
        T y = -tb.at(tb.obj_row(), tb.aux_col[r]);
        if (tb.row_sign[r] < 0) y = -y;
        sol.dual[r] = y / tb.row_scale[r];
    }

    // Active inequalities, judged relative to the row's activity magnitude.
    const long m_ineq = static_cast<long>(lp.ineq_coeffs.size());
    for (long i = 0; i < m_ineq; ++i) {
        T act(0);
        double abs_act = 0.0;
        for (long j = 0; j < nvars; ++j) {
            act += lp.ineq_coeffs[i][j] * sol.primal[j];
            abs_act += std::fabs(to_double(lp.ineq_coeffs[i][j] * sol.primal[j]));
        }
        T slack = lp.ineq_rhs[i] - act;
        bool tight;
        if constexpr (exact) {
            tight = (slack == 0);
        } else {
            const double scale = 1.0 + std::fabs(to_double(lp.ineq_rhs[i])) + abs_act;
            tight = std::fabs(to_double(slack)) <= options.tol * scale;
        }
        if (tight) sol.tight_rows.push_back(static_cast<int>(i));
    }
    return sol;
}

LpSolution<Rational> solve_exact(const LinearProgram<double>& lp, const SimplexOptions& options) {
    return solve(to_exact(lp), options);
}

template <class T>
CertificateReport check_certificate(const LinearProgram<T>& lp, const LpSolution<T>& sol,
                                    double tol) {
    CertificateReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    if (sol.status != LpStatus::Optimal) {
        fail("solution status is not optimal");
        return report;
    }
    const long nvars = static_cast<long>(lp.num_vars());
    const long m_ineq = static_cast<long>(lp.ineq_coeffs.size());
    const long m_eq = static_cast<long>(lp.eq_coeffs.size());
    if (static_cast<long>(sol.primal.size()) != nvars ||
        static_cast<long>(sol.dual.size()) != m_ineq + m_eq) {
        fail("solution dimensions do not match the program");
        return report;
    }
    if constexpr (scalar_traits<T>::exact) tol = 0.0;

    auto leq = [&](const T& lhs, const T& rhs, double scale) {
        if constexpr (scalar_traits<T>::exact) {
            return lhs <= rhs;
        } else {
            return to_double(lhs) <= to_double(rhs) + tol * scale;
        }
    };
    auto near = [&](const T& lhs, const T& rhs, double scale) {
        if constexpr (scalar_traits<T>::exact) {
            return lhs == rhs;
        } else {
            return std::fabs(to_double(lhs) - to_double(rhs)) <= tol * scale;
        }
    };

    // Primal feasibility. Tolerances scale with the absolute activity of the
    // row: on data spanning many orders of magnitude, evaluating a.x itself
    // carries roundoff of that size.
    for (long j = 0; j < nvars; ++j) {
        if (lp.sign(j) == VarSign::NonNegative && !leq(T(0), sol.primal[j], 1.0)) {
            fail("primal variable " + std::to_string(j) + " negative");
        }
    }
    std::vector<T> ineq_slack(m_ineq, T(0));
    std::vector<double> ineq_scale(m_ineq, 0.0);
    for (long i = 0; i < m_ineq; ++i) {
        T act(0);
        double abs_act = 0.0;
        for (long j = 0; j < nvars; ++j) {
            act += lp.ineq_coeffs[i][j] * sol.primal[j];
            abs_act += std::fabs(to_double(lp.ineq_coeffs[i][j] * sol.primal[j]));
        }
        ineq_slack[i] = lp.ineq_rhs[i] - act;
        ineq_scale[i] = 1.0 + std::fabs(to_double(lp.ineq_rhs[i])) + abs_act;
        if (!leq(act, lp.ineq_rhs[i], ineq_scale[i])) {
            fail("inequality row " + std::to_string(i) + " violated");
        }
    }
    for (long k = 0; k < m_eq; ++k) {
        T act(0);
        double abs_act = 0.0;
        for (long j = 0; j < nvars; ++j) {
            act += lp.eq_coeffs[k][j] * sol.primal[j];
            abs_act += std::fabs(to_double(lp.eq_coeffs[k][j] * sol.primal[j]));
        }
        if (!near(act, lp.eq_rhs[k], 1.0 + std::fabs(to_double(lp.eq_rhs[k])) + abs_act)) {
            fail("equality row " + std::to_string(k) + " violated");
        }
    }

    // Dual feasibility: y >= 0 on inequality rows, and reduced costs
    // c_j - y.A_j - w.E_j must be <= 0 (== 0 for free variables).
    for (long i = 0; i < m_ineq; ++i) {
        if (!leq(T(0), sol.dual[i], 1.0)) {
            fail("dual multiplier " + std::to_string(i) + " negative");
        }
    }
    std::vector<T> reduced(nvars);
    std::vector<double> reduced_scale(nvars, 0.0);
    for (long j = 0; j < nvars; ++j) {
        T red = lp.objective[j];
        double abs_sum = std::fabs(to_double(lp.objective[j]));
        for (long i = 0; i < m_ineq; ++i) {
            red -= sol.dual[i] * lp.ineq_coeffs[i][j];
            abs_sum += std::fabs(to_double(sol.dual[i] * lp.ineq_coeffs[i][j]));
        }
        for (long k = 0; k < m_eq; ++k) {
            red -= sol.dual[m_ineq + k] * lp.eq_coeffs[k][j];
            abs_sum += std::fabs(to_double(sol.dual[m_ineq + k] * lp.eq_coeffs[k][j]));
        }
        reduced[j] = red;
        reduced_scale[j] = 1.0 + abs_sum;
        if (lp.sign(j) == VarSign::Free) {
            if (!near(red, T(0), reduced_scale[j])) {
                fail("free variable " + std::to_string(j) + " reduced cost nonzero");
            }
        } else {
            if (!leq(red, T(0), reduced_scale[j])) {
                fail("variable " + std::to_string(j) + " reduced cost positive");
            }
        }
    }

    // Complementary slackness.
    for (long i = 0; i < m_ineq; ++i) {
        T prod = sol.dual[i] * ineq_slack[i];
        const double scale = (1.0 + std::fabs(to_double(sol.dual[i]))) * ineq_scale[i];
        if (!near(prod, T(0), scale)) fail("complementary slackness violated on row " + std::to_string(i));
    }
    for (long j = 0; j < nvars; ++j) {
        T prod = sol.primal[j] * reduced[j];
        const double scale = (1.0 + std::fabs(to_double(sol.primal[j]))) * reduced_scale[j];
        if (!near(prod, T(0), scale)) fail("complementary slackness violated on variable " + std::to_string(j));
    }

    // Strong duality.
    T dual_obj(0);
    for (long i = 0; i < m_ineq; ++i) dual_obj += sol.dual[i] * lp.ineq_rhs[i];
    for (long k = 0; k < m_eq; ++k) dual_obj += sol.dual[m_ineq + k] * lp.eq_rhs[k];
    if (!near(sol.value, dual_obj, 1.0 + std::fabs(to_double(sol.value)))) {
        fail("primal and dual objectives disagree");
    }
    return report;
}

template <class T>
std::vector<int> support(const LpSolution<T>& sol, double tol) {
    std::vector<int> out;
    for (std::size_t j = 0; j < sol.primal.size(); ++j) {
        if constexpr (scalar_traits<T>::exact) {
            if (!(sol.primal[j] == 0)) out.push_back(static_cast<int>(j));
        } else {
            if (sol.primal[j] > tol) out.push_back(static_cast<int>(j));
        }
    }
    return out;
}

template LpSolution<double> solve(const LinearProgram<double>&, const SimplexOptions&);
template LpSolution<Rational> solve(const LinearProgram<Rational>&, const SimplexOptions&);
template CertificateReport check_certificate(const LinearProgram<double>&, const LpSolution<double>&,
                                             double);
template CertificateReport check_certificate(const LinearProgram<Rational>&,
                                             const LpSolution<Rational>&, double);
template std::vector<int> support(const LpSolution<double>&, double);
template std::vector<int> support(const LpSolution<Rational>&, double);

}  // namespace hdcap
