#include "taylorlab/errors.hpp"
#include "taylorlab/simplex.hpp"
#include "taylorlab/taylor.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>

using namespace taylorlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("exact simplex volume", "[simplex]")
{
    CHECK_THAT(simplex_volume_exact({3, 0.0, 1.0}), WithinAbs(0.16666667, 1e-8));
    CHECK(simplex_volume_exact({1, -1.0, 2.0}) == 3.0);
    CHECK_THAT(simplex_volume_exact({4, 0.0, 2.0}), WithinRel(16.0 / 24.0, 1e-15));
    CHECK_THROWS_AS(simplex_volume_exact({13, 0.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(simplex_volume_exact({0, 0.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(simplex_volume_exact({2, 1.0, 1.0}), PreconditionError);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
}

TEST_CASE("Monte Carlo volume is within 4 sigma", "[simplex][montecarlo]")
{
    for (int n = 2; n <= 4; ++n) {
        auto est = simplex_volume_montecarlo({n, 0.0, 1.0}, {1'000'000, 7});
        double exact = 1.0 / static_cast<double>(factorial(n));
        INFO("n = " << n << " estimate " << est.estimate);
        CHECK(std::abs(est.estimate - exact) <= 4.0 * est.std_error);
        CHECK(est.samples == 1'000'000);
    }
    auto one = simplex_volume_montecarlo({1, 0.5, 2.0}, {1000, 1});
    CHECK(one.estimate == 1.5);
    CHECK(one.std_error == 0.0);
}

TEST_CASE("Monte Carlo results do not depend on the worker count", "[simplex][montecarlo]")
{
    const SimplexSpec spec{3, -1.0, 1.0};
    const MonteCarloConfig cfg{200'001, 99};
    auto serial = simplex_volume_montecarlo(spec, cfg, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        auto parallel = simplex_volume_montecarlo(spec, cfg, w);
        CHECK(parallel.hits == serial.hits);
        CHECK(parallel.estimate == serial.estimate);
    }
    auto p1 = ordering_partition_check(3, {50'000, 4}, 1);
    auto p4 = ordering_partition_check(3, {50'000, 4}, 4);
    CHECK(p1.cell_counts == p4.cell_counts);
    CHECK(p1.chi_square == p4.chi_square);
}

TEST_CASE("sample count guard", "[simplex]")
{
    CHECK_THROWS_AS(simplex_volume_montecarlo({2, 0.0, 1.0}, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(simplex_volume_montecarlo({2, 0.0, 1.0}, {2'000'000'000, 0}), PreconditionError);
}

TEST_CASE("order cell keys enumerate permutations lexicographically", "[simplex][partition]")
{
    std::array<double, 3> p{0.1, 0.2, 0.3};
    CHECK(order_cell_key(p) == 0);
    p = {0.3, 0.2, 0.1};
    CHECK(order_cell_key(p) == 5);
    p = {0.1, 0.3, 0.2};
    CHECK(order_cell_key(p) == 1);
    p = {0.2, 0.1, 0.3};
    CHECK(order_cell_key(p) == 2);
}

TEST_CASE("partition tally handles ties", "[simplex][partition]")
{
    PartitionTally tally(3);
    std::array<double, 3> tie{0.5, 0.5, 0.1};
    tally.add(tie);
    std::array<double, 3> fine{0.7, 0.1, 0.4};
    tally.add(fine);
    CHECK(tally.total() == 2);
    CHECK(tally.discarded() == 1);
    CHECK(tally.classified() == 1);
    CHECK(tally.misclassified() == 0);
    CHECK(tally.key_mismatches() == 0);
    // 0.1 <= 0.4 <= 0.7 is the permutation (1, 2, 0), rank 3.
    CHECK(tally.cell_counts()[3] == 1);
}

TEST_CASE("order cells tile the cube", "[simplex][partition]")
{
    auto r = ordering_partition_check(3, {600'000, 2024});
    CHECK(r.all_classified_once);
    CHECK(r.classified + r.discarded == 600'000);
    CHECK(r.cell_counts.size() == 6);
    CHECK(r.degrees_of_freedom == 5);
    CHECK(r.chi_square <= r.chi_square_critical);
    CHECK(r.max_cell_sigma <= 5.0);
    CHECK(r.pass());
    for (const auto& c : r.checks())
        CHECK(c.pass);
    CHECK_THROWS_AS(ordering_partition_check(7, {10, 0}), PreconditionError);
}

TEST_CASE("chi-square quantiles", "[simplex]")
{
    // Tabulated 99.9% points.
    CHECK_THAT(chi_square_quantile_999(1), WithinAbs(10.828, 1e-3));
    CHECK_THAT(chi_square_quantile_999(5), WithinAbs(20.515, 1e-3));
    CHECK_THAT(chi_square_quantile_999(23), WithinAbs(49.728, 1e-3));
}

TEST_CASE("slice volumes", "[simplex][slice]")
{
    CHECK(sliced_simplex_volume(0, 0.3, 0.0, 1.0) == 1.0);
    CHECK_THAT(sliced_simplex_volume(2, 0.4, 0.0, 1.0), WithinAbs(0.18, 1e-15));
    CHECK_THAT(sliced_simplex_volume(3, 0.0, 0.0, 2.0), WithinAbs(8.0 / 6.0, 1e-15));
    CHECK(sliced_simplex_volume(3, 1.0, 0.0, 1.0) == 0.0);
    CHECK_THROWS_AS(sliced_simplex_volume(1, 1.5, 0.0, 1.0), PreconditionError);
}

TEST_CASE("slicing reproduces the remainder on both sides of the base", "[simplex][slice]")
{
    const Expr f = parse("exp(x)");
    for (double x : {-1.2, -0.3, 0.4, 1.0}) {
        for (int n = 0; n <= 4; ++n) {
            auto t = expand(f, 0.1, n);
            INFO("x = " << x << ", N = " << n);
            CHECK_THAT(remainder_by_slicing(f, 0.1, n, x), WithinAbs(remainder_direct(t, x), 1e-10));
        }
    }
    CHECK(remainder_by_slicing(f, 0.1, 2, 0.1) == 0.0);
    CHECK(remainder_by_slicing(parse("x^2"), 0.1, 2, 0.8) == 0.0);
}
