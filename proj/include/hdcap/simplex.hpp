// Dense two-phase primal simplex over a generic scalar.
//
// Problem form: maximize c.x subject to A x <= b, E x == d, with each
// variable either non-negative or free. Two scalar modes are supported:
//   double         - tolerance-based tests (SimplexOptions::tol), Dantzig
//                    pricing with a Bland fallback after 10*rows pivots;
//   hdcap::Rational - exact arithmetic, Bland's rule throughout, so
//                    termination is guaranteed and results are exact.
//
// The solver targets small-to-medium dense programs and favors a verifiable
// result over speed: check_certificate() re-derives optimality from the
// original problem data, independent of the pivoting path.
#pragma once

#include <string>
#include <vector>

#include "hdcap/rational.hpp"

namespace hdcap {

enum class VarSign { NonNegative, Free };
enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

template <class T>
struct LinearProgram {
    std::vector<T> objective;  // maximize objective . x
    std::vector<std::vector<T>> ineq_coeffs;
    std::vector<T> ineq_rhs;
    std::vector<std::vector<T>> eq_coeffs;
    std::vector<T> eq_rhs;
    std::vector<VarSign> signs;  // empty means every variable is non-negative

    std::size_t num_vars() const { return objective.size(); }
    VarSign sign(std::size_t j) const { return signs.empty() ? VarSign::NonNegative : signs[j]; }

    void add_inequality(std::vector<T> coeffs, T rhs) {
        ineq_coeffs.push_back(std::move(coeffs));
        ineq_rhs.push_back(std::move(rhs));
    }
    void add_equality(std::vector<T> coeffs, T rhs) {
        eq_coeffs.push_back(std::move(coeffs));
        eq_rhs.push_back(std::move(rhs));
    }
};

template <class T>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    T value{};
    std::vector<T> primal;        // original variable space
    std::vector<T> dual;          // one multiplier per row: inequalities, then equalities
    std::vector<int> tight_rows;  // inequality rows with zero slack at the optimum
    long pivots = 0;
};

struct SimplexOptions {
    double tol = 1e-9;      // float-mode feasibility/optimality tolerance
    long bland_after = 10;  // switch float pricing to Bland after bland_after * rows pivots
    long max_pivots = 500000;
    bool parallel = true;  // OpenMP row elimination on large tableaus
};

template <class T>
LpSolution<T> solve(const LinearProgram<T>& lp, const SimplexOptions& options = {});

// Exact copy of a float program; every finite double converts to a rational
// without rounding. Non-finite coefficients raise invalid_argument.
LinearProgram<Rational> to_exact(const LinearProgram<double>& lp);

LpSolution<Rational> solve_exact(const LinearProgram<double>& lp, const SimplexOptions& options = {});

struct CertificateReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Verifies primal feasibility, dual feasibility, complementary slackness and
// strong duality against the original data. Pass tol = 0 in exact mode.
template <class T>
CertificateReport check_certificate(const LinearProgram<T>& lp, const LpSolution<T>& sol,
                                    double tol);

// 0-based indices of primal variables with value > tol (float) or != 0 (exact).
template <class T>
std::vector<int> support(const LpSolution<T>& sol, double tol = 1e-9);

extern template LpSolution<double> solve(const LinearProgram<double>&, const SimplexOptions&);
extern template LpSolution<Rational> solve(const LinearProgram<Rational>&, const SimplexOptions&);
extern template CertificateReport check_certificate(const LinearProgram<double>&,
                                                    const LpSolution<double>&, double);
extern template CertificateReport check_certificate(const LinearProgram<Rational>&,
                                                    const LpSolution<Rational>&, double);
extern template std::vector<int> support(const LpSolution<double>&, double);
extern template std::vector<int> support(const LpSolution<Rational>&, double);

}  // namespace hdcap
