#include "taylorlab/errors.hpp"
#include "taylorlab/fixedpoint.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace taylorlab;
using Catch::Matchers::WithinAbs;

TEST_CASE("cosine iteration converges to the Dottie number", "[fixedpoint]")
{
    auto g = RealFunction::from_expr(parse("cos(x)"), Interval::wide());
    auto trace = iterate_scalar(g, 1.0, 1e-12, 200);
    REQUIRE(trace.converged);
    CHECK_THAT(trace.iterates.back(), WithinAbs(0.7390851332, 1e-10));
    CHECK(trace.iterates.front() == 1.0);
    CHECK(trace.iterates.size() == trace.residuals.size() + 1);
    CHECK(static_cast<int>(trace.residuals.size()) == trace.iterations_used);
}

TEST_CASE("a divergent map reports non-convergence", "[fixedpoint]")
{
    auto g = RealFunction::from_expr(parse("2*x + 1"), Interval::wide());
    auto trace = iterate_scalar(g, 0.0, 1e-10, 20);
    CHECK_FALSE(trace.converged);
    CHECK(trace.iterations_used == 20);
    CHECK(trace.iterates[3] == 7.0);
}

TEST_CASE("an iteration always takes at least one step", "[fixedpoint]")
{
    auto g = RealFunction::from_expr(parse("x"), Interval::wide());
    auto trace = iterate_scalar(g, 3.0, 1e-10, 5);
    CHECK(trace.converged);
    CHECK(trace.iterations_used == 1);
    CHECK_THROWS_AS(iterate_scalar(g, 3.0, 1e-10, 0), PreconditionError);
}

TEST_CASE("Newton on x^2 - 2", "[fixedpoint][newton]")
{
    auto trace = newton(parse("x^2 - 2"), 1.0, 1e-10, 20);
    REQUIRE(trace.converged);
    CHECK(trace.iterations_used <= 6);
    CHECK(trace.iterates[1] == 1.5);
    CHECK_THAT(trace.iterates[2], WithinAbs(1.4166667, 1e-7));
    CHECK_THAT(trace.iterates[2], WithinAbs(17.0 / 12.0, 1e-15));
    // |f| <= 1e-10 pins x to within 1e-10 / f'(sqrt 2).
    CHECK_THAT(trace.iterates.back(), WithinAbs(std::sqrt(2.0), 1e-10));
    CHECK(trace.residuals.back() <= 1e-10);
}

TEST_CASE("Newton stops at a zero slope and keeps the trace", "[fixedpoint][newton]")
{
    try {
        newton(parse("x^2 + 1"), 0.0, 1e-10, 10);
        FAIL("expected IterationFailure");
    } catch (const IterationFailure& e) {
        CHECK(std::string(e.what()).find("x_0") != std::string::npos);
        CHECK(e.trace().iterates.size() == 1);
        CHECK_FALSE(e.trace().converged);
    }
}

TEST_CASE("Newton leaving the domain is reported", "[fixedpoint][newton]")
{
    CHECK_THROWS_AS(newton(parse("ln(x)"), 3.0, 1e-12, 10), IterationFailure);
}

TEST_CASE("power method on a symmetric 2x2 matrix", "[fixedpoint][power]")
{
    SmallMatrix m(2, {2.0, 1.0, 1.0, 2.0});
    auto r = power_method(m, {1.0, 0.0}, 1e-12, 200);
    REQUIRE(r.trace.converged);
    CHECK_THAT(r.eigenvalue, WithinAbs(3.0, 1e-8));
    CHECK_THAT(std::abs(r.eigenvector[0]), WithinAbs(std::sqrt(0.5), 1e-10));
    CHECK_THAT(r.eigenvector[0] - r.eigenvector[1], WithinAbs(0.0, 1e-10));
}

TEST_CASE("power method with a negative dominant eigenvalue", "[fixedpoint][power]")
{
    SmallMatrix m(2, {-4.0, 0.0, 0.0, 1.0});
    auto r = power_method(m, {1.0, 1.0}, 1e-12, 500);
    REQUIRE(r.trace.converged);
    CHECK_THAT(r.eigenvalue, WithinAbs(-4.0, 1e-10));
}

TEST_CASE("power method preconditions", "[fixedpoint][power]")
{
    CHECK_THROWS_AS(SmallMatrix(1, {1.0}), PreconditionError);
    CHECK_THROWS_AS(SmallMatrix(2, {1.0, 2.0, 3.0}), PreconditionError);
    SmallMatrix m(2, {1.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(power_method(m, {0.0, 0.0}, 1e-10, 10), PreconditionError);
    CHECK_THROWS_AS(power_method(m, {1.0}, 1e-10, 10), PreconditionError);
    SmallMatrix nil(2, {0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(power_method(nil, {1.0, 0.0}, 1e-10, 10), std::runtime_error);
}

TEST_CASE("roots are fixed points of x + f", "[fixedpoint]")
{
    const Expr f = parse("x^3 - 2*x - 5");
    auto trace = newton(f, 2.0, 1e-13, 50);
    REQUIRE(trace.converged);
    double r = trace.iterates.back();
    CHECK_THAT(root_as_fixed_point(f)(r), WithinAbs(r, 1e-12));
}
