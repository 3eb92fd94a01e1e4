// Exact rational scalar (GMP mpq) used by the exact solver mode, plus the
// small amount of scalar-type glue the templated numerics need.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace hdcap {

using Rational = mpq_class;

// Every finite double is a dyadic rational, so this conversion is exact.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational_from_double: non-finite input");
    }
    return Rational(x);
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double abs(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational abs(const Rational& q) { return Rational(::abs(q)); }
};

}  // namespace hdcap
