#include <cmath>
#include <random>

#include <doctest.h>

#include "hdcap/capacity.hpp"
#include "hdcap/experiments.hpp"
#include "hdcap/theory.hpp"
#include "hdcap/worst_case.hpp"
#include "oracle.hpp"

using namespace hdcap;

namespace {

DiamondNetwork make(std::initializer_list<RelayLinks> relays) {
    return DiamondNetwork{std::vector<RelayLinks>(relays)};
}

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_SUITE("capacity") {

TEST_CASE("cut_value reproduces the n=2 constraint table") {
    // distinct values so every max is unambiguous
    auto net = make({{2, 5}, {3, 7}});
    const StateMask none = 0, s1 = 1, s2 = 2, both = 3;

    // cut {}: coefficients max(l1,l2), l2, l1, 0
    CHECK(cut_value(net, none, 0u) == 3.0);
    CHECK(cut_value(net, s1, 0u) == 3.0);
    CHECK(cut_value(net, s2, 0u) == 2.0);
    CHECK(cut_value(net, both, 0u) == 0.0);
    // cut {1}: l2, l2+r1, 0, r1
    CHECK(cut_value(net, none, 1u) == 3.0);
    CHECK(cut_value(net, s1, 1u) == 8.0);
    CHECK(cut_value(net, s2, 1u) == 0.0);
    CHECK(cut_value(net, both, 1u) == 5.0);
    // cut {2}: l1, 0, l1+r2, r2
    CHECK(cut_value(net, none, 2u) == 2.0);
    CHECK(cut_value(net, s1, 2u) == 0.0);
    CHECK(cut_value(net, s2, 2u) == 9.0);
    CHECK(cut_value(net, both, 2u) == 7.0);
    // cut {1,2}: 0, r1, r2, max(r1,r2)
    CHECK(cut_value(net, none, 3u) == 0.0);
    CHECK(cut_value(net, s1, 3u) == 5.0);
    CHECK(cut_value(net, s2, 3u) == 7.0);
    CHECK(cut_value(net, both, 3u) == 7.0);
}

TEST_CASE("build_full_lp shape") {
    auto lp1 = build_full_lp(make({{2, 2}}));
    CHECK(lp1.num_vars() == 3);  // t, lambda_{}, lambda_{1}
    CHECK(lp1.ineq_coeffs.size() == 2);
    CHECK(lp1.eq_coeffs.size() == 1);
    CHECK(lp1.sign(0) == VarSign::Free);
    CHECK(lp1.sign(1) == VarSign::NonNegative);

    auto net2 = make({{2, 5}, {3, 7}});
    auto lp2 = build_full_lp(net2);
    CHECK(lp2.num_vars() == 5);
    CHECK(lp2.ineq_coeffs.size() == 4);
    for (CutMask cut = 0; cut < 4; ++cut) {
        CHECK(lp2.ineq_coeffs[cut][0] == 1.0);
        CHECK(lp2.ineq_rhs[cut] == 0.0);
        for (StateMask s = 0; s < 4; ++s) {
            CHECK(lp2.ineq_coeffs[cut][1 + s] == -cut_value(net2, s, cut));
        }
    }

    CHECK(build_full_lp(make({{1, 1}, {1, 1}, {1, 1}})).ineq_coeffs.size() == 8);
    DiamondNetwork too_big;
    too_big.relays.assign(13, {1.0, 1.0});
    CHECK_THROWS_AS(build_full_lp(too_big), std::invalid_argument);
}

TEST_CASE("single relay capacity matches the LP") {
    auto result = approximate_capacity(make({{2, 2}}));
    CHECK(result.value == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(result.schedule.weights.count(0u) == 1);
    REQUIRE(result.schedule.weights.count(1u) == 1);
    CHECK(result.schedule.weights.at(0u) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(result.schedule.weights.at(1u) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(result.diag.certificate_ok);
}

TEST_CASE("n=2 symmetric network against the grid oracle") {
    auto net = make({{2, 2}, {2, 2}});
    auto result = approximate_capacity(net);
    CHECK(result.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(result.value <= trivial_upper_bound(net) + 1e-9);

    const long steps = 250;  // coarse here; the acceptance suite runs 1e-3
    const double grid = hdcap::testing::grid_capacity_n2(net, steps);
    CHECK(grid <= result.value + 1e-9);
    CHECK(result.value - grid <= 4.0 / static_cast<double>(steps));
}

TEST_CASE("worst-case even network hits 2 + sqrt(2)") {
    auto result = approximate_capacity(worst_even_type1(6));
    CHECK(result.value == doctest::Approx(2.0 + kSqrt2).epsilon(1e-10));
    CHECK(result.diag.certificate_ok);
}

TEST_CASE("schedule_rate") {
    Schedule half;
    half.n = 1;
    half.weights[0u] = 0.5;
    half.weights[1u] = 0.5;
    CHECK(schedule_rate(make({{2, 2}}), half) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(schedule_rate(worst_even_type1(6), canonical_schedule(FamilyId::Even1, 6)) ==
          doctest::Approx(2.0 + kSqrt2).epsilon(1e-12));

    Schedule idle;
    idle.n = 2;
    idle.weights[0u] = 1.0;  // nobody ever transmits
    CHECK(schedule_rate(make({{2, 2}, {2, 2}}), idle) == 0.0);

    Schedule bad_sum;
    bad_sum.n = 1;
    bad_sum.weights[0u] = 0.75;
    CHECK_THROWS_AS(schedule_rate(make({{2, 2}}), bad_sum), std::invalid_argument);
    Schedule negative;
    negative.n = 1;
    negative.weights[0u] = 1.5;
    negative.weights[1u] = -0.5;
    CHECK_THROWS_AS(schedule_rate(make({{2, 2}}), negative), std::invalid_argument);
}

TEST_CASE("trivial_upper_bound") {
    CHECK(trivial_upper_bound(make({{2, 2}})) == 2.0);
    CHECK(trivial_upper_bound(make({{1, 5}, {3, 2}})) == 3.0);
    CHECK(trivial_upper_bound(worst_even_type1(6)) == doctest::Approx(2.0 + kSqrt2).epsilon(1e-12));
}

TEST_CASE("ratio") {
    CHECK(ratio(make({{3, 5}})) == 1.0);  // exactly: a single relay is its own network
    CHECK(ratio(worst_even_type1(6)) == doctest::Approx(1.0 / (2.0 + kSqrt2)).epsilon(1e-10));
    CHECK(ratio(make({{2, 2}, {2, 2}})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(ratio(make({{0, 0}})), std::domain_error);
}

TEST_CASE("g_function") {
    // t = 0 reduces to (1-a1)(1/z1 + 1) + a1 (1/z2 + 1)
    std::vector<double> z{2.0, 4.0};
    std::vector<double> alpha{0.25, 0.75};
    CHECK(g_function(z, alpha, 0) ==
          doctest::Approx(0.75 * 1.5 + 0.25 * 1.25).epsilon(1e-15));
    // t = n reduces to a_n (z_n + 1) + (1-a_n)(z_{n-1} + 1)
    CHECK(g_function(z, alpha, 2) == doctest::Approx(0.75 * 5.0 + 0.25 * 3.0).epsilon(1e-15));
    // sentinel bookkeeping example
    CHECK(g_function({1.0, 1.0}, {1.0, 1.0}, 1) == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(g_function({0.0, 1.0}, {0.5, 0.5}, 0), std::domain_error);
    CHECK_THROWS_AS(g_function(z, alpha, 3), std::invalid_argument);
    CHECK_THROWS_AS(g_function(z, {0.5}, 0), std::invalid_argument);
}

TEST_CASE("reduced_lp on tiny cases") {
    NormalizedNetwork one;
    one.network = make({{2, 2}});
    one.z = {1.0};
    auto sol1 = reduced_lp(one);
    CHECK(sol1.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol1.alpha[0] == doctest::Approx(0.5).epsilon(1e-9));

    NormalizedNetwork two;
    two.network = make({{2, 2}, {2, 2}});
    two.z = {1.0, 1.0};
    auto sol2 = reduced_lp(two);
    CHECK(sol2.value == doctest::Approx(2.0).epsilon(1e-12));

    auto norm6 = normalize(worst_even_type1(6));
    auto sol6 = reduced_lp(norm6);
    CHECK(sol6.value == doctest::Approx(2.0 + kSqrt2).epsilon(1e-9));

    // the returned point satisfies every cut of its own program
    for (int t = 0; t <= 2; ++t) {
        CHECK(sol2.value <= g_function(two.z, sol2.alpha, t) + 1e-9);
    }
}

TEST_CASE("capacity properties on random networks") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 5.0);
        auto net = hdcap::testing::random_uniform_network(rng, n, 0.1, 6.0);
        auto result = approximate_capacity(net);
        CHECK(result.diag.certificate_ok);

        // achievability of the extracted schedule
        CHECK(schedule_rate(net, result.schedule) == doctest::Approx(result.value).epsilon(1e-10));
        // sandwich
        CHECK(result.value >= best_relay(net).second - 1e-9);
        CHECK(result.value <= trivial_upper_bound(net) + 1e-9);
        // support is reported, never asserted to be small
        CHECK(result.support_size >= 1);

        // monotonicity under a single-link increase
        auto bumped = net;
        const int which = static_cast<int>(uniform01(rng) * n);
        if (uniform01(rng) < 0.5) {
            bumped.relays[which].ell += 0.5 + uniform01(rng);
        } else {
            bumped.relays[which].r += 0.5 + uniform01(rng);
        }
        CHECK(approximate_capacity(bumped).value >= result.value - 1e-9);

        // exact scaling
        const double alpha = 0.25 + 4.0 * uniform01(rng);
        CHECK(approximate_capacity(scale(net, alpha)).value ==
              doctest::Approx(alpha * result.value).epsilon(1e-9));

        // relabeling invariance
        auto perm = hdcap::testing::random_permutation(rng, n);
        DiamondNetwork shuffled;
        for (int idx : perm) shuffled.relays.push_back(net.relays[idx]);
        CHECK(approximate_capacity(shuffled).value == doctest::Approx(result.value).epsilon(1e-9));

        // the ratio respects the worst-case floor
        CHECK(ratio(net) >= bound(n) - 1e-9);
    }
}

TEST_CASE("reduced program upper-bounds the full one on normalized networks") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(uniform01(rng) * 5.0);
        auto norm = normalize(hdcap::testing::random_uniform_network(rng, n, 0.2, 6.0));
        const double full = approximate_capacity(norm.network).value;
        const double reduced = reduced_lp(norm).value;
        CHECK(full <= reduced + 1e-9);
        CHECK(reduced <= opt4(n) + 1e-9);
    }
}

TEST_CASE("exact mode agrees with float mode on rational networks") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 4.0);
        auto net = hdcap::testing::random_dyadic_network(rng, n);
        auto approx = approximate_capacity(net);
        auto exact = approximate_capacity(net, ArithmeticMode::ExactRational);
        REQUIRE(exact.diag.exact);
        CHECK(exact.diag.certificate_ok);
        CHECK(std::fabs(approx.value - exact.value) <= 1e-7 * (1.0 + std::fabs(exact.value)));
    }
}

}  // TEST_SUITE
