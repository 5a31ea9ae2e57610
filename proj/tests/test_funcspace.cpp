#include "taylorlab/errors.hpp"
#include "taylorlab/funcspace.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace taylorlab;
using Catch::Matchers::WithinAbs;

TEST_CASE("interval preconditions", "[funcspace]")
{
    CHECK_THROWS_AS(Interval(1.0, 1.0), PreconditionError);
    CHECK_THROWS_AS(Interval(2.0, 1.0), PreconditionError);
    CHECK_THROWS_AS(Interval(0.0, INFINITY), PreconditionError);
    Interval s = Interval::spanning(2.0, -1.0, 0.5);
    CHECK(s.contains(-1.0));
    CHECK(s.contains(2.0));
    CHECK(Interval::spanning(1.0, 1.0).length() > 0.0);
}

TEST_CASE("integrals against closed forms", "[funcspace][integrate]")
{
    const Interval d(-4.0, 4.0);
    auto f = [&](const char* t) { return RealFunction::from_expr(parse(t), d); };
    CHECK_THAT(integrate(f("exp(x)"), 0.0, 1.0), WithinAbs(std::numbers::e - 1.0, 1e-10));
    CHECK_THAT(integrate(f("sin(x)"), 0.0, std::numbers::pi), WithinAbs(2.0, 1e-10));
    CHECK_THAT(integrate(f("x^2"), -1.0, 2.0), WithinAbs(3.0, 1e-12));
    CHECK_THAT(integrate(f("1/(1 + x^2)"), -3.0, 3.0), WithinAbs(2.0 * std::atan(3.0), 1e-10));
    CHECK_THAT(integrate(f("cos(20*x)"), 0.0, 3.0), WithinAbs(std::sin(60.0) / 20.0, 1e-10));
}

TEST_CASE("integration is oriented", "[funcspace][integrate]")
{
    auto f = RealFunction::from_expr(parse("exp(x)"), Interval(-2.0, 2.0));
    CHECK(integrate(f, 1.0, -1.0) == -integrate(f, -1.0, 1.0));
    CHECK(integrate(f, 0.7, 0.7) == 0.0);
}

TEST_CASE("integration limits must lie in the domain", "[funcspace][integrate]")
{
    auto f = RealFunction::from_expr(parse("x"), Interval(0.0, 1.0));
    CHECK_THROWS_AS(integrate(f, 0.0, 2.0), DomainError);
}

TEST_CASE("an integrable singularity exhausts the depth budget", "[funcspace][integrate]")
{
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-14;
    cfg.max_subdivision_depth = 4;
    auto g = [](double t) { return 1.0 / std::sqrt(std::abs(t - 0.3)); };
    CHECK_THROWS_AS(integrate(g, 0.0, 1.0, cfg), ToleranceError);
}

TEST_CASE("quadrature configuration is validated", "[funcspace]")
{
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-16;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
    cfg = {};
    cfg.max_subdivision_depth = 0;
    CHECK_THROWS_AS(cfg.validate(), PreconditionError);
}

TEST_CASE("sup_abs finds interior maxima", "[funcspace][sup]")
{
    const Interval d(-3.0, 3.0);
    auto f = RealFunction::from_expr(parse("x*exp(-x^2)"), d);
    CHECK_THAT(sup_abs(f, d), WithinAbs(std::exp(-0.5) / std::sqrt(2.0), 1e-12));
    auto g = RealFunction::from_expr(parse("sin(x)"), d);
    CHECK_THAT(sup_abs(g, Interval(0.0, 1.0)), WithinAbs(std::sin(1.0), 1e-15));
    CHECK(sup_abs(constant_one(d), d) == 1.0);
}

TEST_CASE("evaluation outside the domain is an error", "[funcspace]")
{
    auto f = RealFunction::from_expr(parse("x"), Interval(0.0, 1.0));
    CHECK_THROWS_AS(f(1.5), DomainError);
    CHECK(f.with_domain(Interval(0.0, 2.0))(1.5) == 1.5);
}

TEST_CASE("arithmetic stays symbolic for expression inputs", "[funcspace]")
{
    const Interval d(-1.0, 1.0);
    auto f = RealFunction::from_expr(parse("sin(x)"), d);
    auto g = RealFunction::from_expr(parse("x^2"), d);
    auto h = combine(2.0, f, -3.0, g);
    REQUIRE(h.source() == RealFunction::Source::expression);
    CHECK_THAT(h(0.4), WithinAbs(2.0 * std::sin(0.4) - 3.0 * 0.16, 1e-15));
    CHECK_THAT(h.derivative()(0.4), WithinAbs(2.0 * std::cos(0.4) - 6.0 * 0.4, 1e-15));

    auto c = RealFunction::from_closure([](double t) { return t * t; }, d, "sq");
    CHECK_FALSE(c.has_derivative());
    CHECK_THROWS_AS(c.derivative(), UnsupportedDifferentiation);
    auto sum = add(c, f);
    CHECK(sum.source() == RealFunction::Source::closure);
    CHECK_THAT(sum(0.5), WithinAbs(0.25 + std::sin(0.5), 1e-15));
    CHECK(constant_one(d).derivative()(0.3) == 0.0);
}
