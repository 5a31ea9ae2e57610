// Randomized invariants over generated inputs. Each case is seeded, so failures reproduce.
#include "taylorlab/errors.hpp"
#include "taylorlab/operators.hpp"
#include "taylorlab/simplex.hpp"
#include "taylorlab/taylor.hpp"
#include "taylorlab/verify.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <optional>

using namespace taylorlab;

namespace {

template <class F>
std::optional<double> defined(F&& f)
{
    try {
        return f();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

}  // namespace

TEST_CASE("simplify never changes a defined value", "[property][expr]")
{
    const auto seed = GENERATE(range<std::uint64_t>(1, 9));
    RngCursor rng{CounterRng(seed)};
    for (int i = 0; i < 200; ++i) {
        Expr e = verify::random_expression(rng, 5);
        Expr s = simplify(e);
        for (int k = 0; k < 20; ++k) {
            double x = rng.uniform(-4.0, 4.0);
            auto v = defined([&] { return evaluate(e, x); });
            if (!v)
                continue;
            auto w = defined([&] { return evaluate(s, x); });
            INFO(render(e) << " vs " << render(s) << " at " << x);
            REQUIRE(w.has_value());
            REQUIRE(*w == *v);
        }
    }
}

TEST_CASE("render and parse are inverse", "[property][expr]")
{
    const auto seed = GENERATE(range<std::uint64_t>(11, 19));
    RngCursor rng{CounterRng(seed)};
    for (int i = 0; i < 200; ++i) {
        Expr e = verify::random_expression(rng, 5);
        for (const Expr& candidate : {e, derivative(e), differentiate(e)}) {
            INFO(render(candidate));
            REQUIRE(structurally_equal(parse(render(candidate)), candidate));
        }
    }
}

TEST_CASE("differentiation is linear", "[property][expr]")
{
    const auto seed = GENERATE(range<std::uint64_t>(21, 25));
    RngCursor rng{CounterRng(seed)};
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        Expr f = verify::random_expression(rng, 3);
        Expr g = verify::random_expression(rng, 3);
        double alpha = rng.uniform(-3.0, 3.0);
        double beta = rng.uniform(-3.0, 3.0);
        Expr combo = Expr::add(Expr::multiply(Expr::constant(alpha), f),
                               Expr::multiply(Expr::constant(beta), g));
        double x = rng.uniform(-2.0, 2.0);
        auto lhs = defined([&] { return evaluate(derivative(combo), x); });
        auto df = defined([&] { return evaluate(derivative(f), x); });
        auto dg = defined([&] { return evaluate(derivative(g), x); });
        if (!lhs || !df || !dg)
            continue;
        ++compared;
        double rhs = alpha * *df + beta * *dg;
        REQUIRE(std::abs(*lhs - rhs) <= 1e-12 * (1.0 + std::abs(alpha * *df) + std::abs(beta * *dg)));
    }
    CHECK(compared > 50);
}

TEST_CASE("integration is additive over adjacent intervals", "[property][funcspace]")
{
    const auto seed = GENERATE(range<std::uint64_t>(31, 35));
    RngCursor rng{CounterRng(seed)};
    const Interval d(-2.0, 2.0);
    for (const auto& pf : verify::remainder_pool()) {
        auto f = RealFunction::from_expr(pf.f, Interval(pf.lo, pf.hi));
        for (int i = 0; i < 10; ++i) {
            double a = rng.uniform(pf.lo, pf.hi);
            double b = rng.uniform(pf.lo, pf.hi);
            double c = rng.uniform(pf.lo, pf.hi);
            double gap = integrate(f, a, b) + integrate(f, b, c) - integrate(f, a, c);
            REQUIRE(std::abs(gap) <= 3e-10);
            REQUIRE(integrate(f, a, b) == -integrate(f, b, a));
        }
    }
}

TEST_CASE("basis identity at random points", "[property][operators]")
{
    const auto seed = GENERATE(range<std::uint64_t>(41, 45));
    RngCursor rng{CounterRng(seed)};
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 10; ++i) {
            double a = rng.uniform(-3.0, 3.0);
            double x = a + rng.uniform(-2.0, 2.0);
            double closed = std::pow(x - a, n) / static_cast<double>(factorial(n));
            REQUIRE(std::abs(iterated_integral_one(n, a, x) - closed) <= 1e-9);
        }
    }
}

TEST_CASE("the four remainders agree at random points", "[property][taylor]")
{
    const auto seed = GENERATE(range<std::uint64_t>(51, 53));
    RngCursor rng{CounterRng(seed)};
    for (const auto& pf : verify::remainder_pool()) {
        for (int order = 0; order <= 5; ++order) {
            double x = rng.uniform(pf.lo, pf.hi);
            auto t = expand(pf.f, pf.base, order);
            double direct = remainder_direct(t, x);
            std::optional<double> nested;
            if (order + 1 <= max_nested_depth)
                nested = remainder_nested(t, x);
            double gap = max_pairwise_gap(
                {direct, remainder_exact(t, x), nested, remainder_by_slicing(pf.f, pf.base, order, x)});
            INFO(pf.text << " N = " << order << " x = " << x);
            REQUIRE(gap <= (nested ? 1e-6 : 1e-7));
            REQUIRE(std::abs(direct) <= remainder_bound(t, x) * (1.0 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("the remainder bound shrinks like |x - a|/(N + 2)", "[property][taylor]")
{
    const Expr f = parse("exp(x)");
    for (double x : {0.25, 0.5, 1.0}) {
        for (int n = 0; n < 10; ++n) {
            double ratio = remainder_bound(expand(f, 0.0, n + 1), x) / remainder_bound(expand(f, 0.0, n), x);
            REQUIRE(std::abs(ratio - x / (n + 2)) <= 1e-9);
        }
    }
}

TEST_CASE("Monte Carlo output is a pure function of the seed", "[property][simplex]")
{
    const auto seed = GENERATE(range<std::uint64_t>(61, 65));
    const SimplexSpec spec{4, 0.0, 1.0};
    auto first = simplex_volume_montecarlo(spec, {100'000, seed}, 1);
    auto second = simplex_volume_montecarlo(spec, {100'000, seed}, 5);
    REQUIRE(first.hits == second.hits);
    REQUIRE(first.std_error == second.std_error);
}

TEST_CASE("volume recursion between dimensions", "[property][simplex]")
{
    for (int n = 2; n <= SimplexSpec::max_dimension; ++n) {
        double v = simplex_volume_exact({n, 0.5, 2.0});
        double lower = simplex_volume_exact({n - 1, 0.5, 2.0});
        REQUIRE(std::abs(v / lower - 1.5 / n) <= 1e-12);
    }
}
