#include "taylorlab/errors.hpp"
#include "taylorlab/operators.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace taylorlab;
using Catch::Matchers::WithinAbs;

namespace {

const Interval domain(-2.0, 2.0);

RealFunction fn(const char* text)
{
    return RealFunction::from_expr(parse(text), domain, text);
}

}  // namespace

TEST_CASE("D, I_a and evaluation at a", "[operators]")
{
    auto f = fn("sin(x)");
    CHECK_THAT(apply(Operator::differentiate(), f)(0.3), WithinAbs(std::cos(0.3), 1e-15));
    CHECK_THAT(apply(Operator::integrate_from(0.5), f)(1.5),
               WithinAbs(std::cos(0.5) - std::cos(1.5), 1e-10));
    auto ev = apply(Operator::evaluate_at(0.5), f);
    CHECK(ev(-1.0) == std::sin(0.5));
    CHECK(ev(1.9) == std::sin(0.5));
    CHECK(apply(Operator::scale(-2.0), f)(0.3) == -2.0 * std::sin(0.3));
    CHECK(apply(Operator::identity(), f)(0.3) == std::sin(0.3));
}

TEST_CASE("D after I_a returns the integrand", "[operators]")
{
    auto f = fn("exp(x)*cos(x)");
    auto di = apply(Operator::compose(Operator::differentiate(), Operator::integrate_from(0.2)), f);
    for (double x : {-1.0, 0.2, 1.3})
        CHECK(di(x) == f(x));
    // Applied separately, D still sees the integrand through the derivative thunk.
    auto integrated = apply(Operator::integrate_from(0.2), f);
    CHECK(apply(Operator::differentiate(), integrated)(0.7) == f(0.7));
}

TEST_CASE("I_a D f equals f minus f(a)", "[operators]")
{
    auto f = fn("x^3 - x");
    auto g = apply(Operator::compose(Operator::integrate_from(-0.5), Operator::differentiate()), f);
    for (double x : {-1.5, 0.0, 1.0})
        CHECK_THAT(g(x), WithinAbs(f(x) - f(-0.5), 1e-12));
}

TEST_CASE("power and sum", "[operators]")
{
    auto f = fn("x^4");
    CHECK_THAT(apply(Operator::power(Operator::differentiate(), 3), f)(0.5), WithinAbs(12.0, 1e-14));
    auto op = Operator::sum(Operator::identity(), Operator::scale(2.0));
    CHECK(apply(op, f)(0.5) == 3.0 * 0.0625);
    CHECK_THROWS_AS(Operator::power(Operator::identity(), 0), PreconditionError);
}

TEST_CASE("the FTOC operator fixes functions", "[operators][ftoc]")
{
    const Operator L = ftoc_operator(0.25);
    for (const char* text : {"exp(x)", "sin(3*x)", "x^5 - 2*x", "(3 + x)^(-1)"}) {
        auto f = fn(text);
        auto lf = apply(L, f);
        for (double x : {-1.9, -0.3, 0.25, 1.1, 1.95})
            CHECK_THAT(lf(x), WithinAbs(f(x), 5e-10));
    }
}

TEST_CASE("iterated integrals of one give the Taylor basis", "[operators][basis]")
{
    for (int n = 1; n <= max_iterated_integral_depth; ++n) {
        for (auto [a, x] : {std::pair{0.0, 1.0}, std::pair{-0.5, 1.2}, std::pair{1.0, -0.7}}) {
            double expected = std::pow(x - a, n) / std::tgamma(n + 1.0);
            CHECK_THAT(iterated_integral_one(n, a, x), WithinAbs(expected, 1e-9));
        }
    }
    CHECK(iterated_integral_one(3, 0.4, 0.4) == 0.0);
    CHECK_THROWS_AS(iterated_integral_one(0, 0.0, 1.0), PreconditionError);
    CHECK_THROWS_AS(iterated_integral_one(7, 0.0, 1.0), PreconditionError);
}

TEST_CASE("monotone bound", "[operators]")
{
    auto g = fn("cos(x)");
    // sup |cos| on [0, 1] is 1, so the bound is (x - a)^2 / 2.
    CHECK_THAT(monotone_bound(2, g, 0.0, 1.0), WithinAbs(0.5, 1e-15));
    CHECK(monotone_bound(2, g, 0.3, 0.3) == 0.0);
    CHECK_THROWS_AS(monotone_bound(2, g, 1.0, 0.0), PreconditionError);
    double i2 = apply(Operator::power(Operator::integrate_from(0.0), 2), g)(1.0);
    CHECK_THAT(i2, WithinAbs(1.0 - std::cos(1.0), 1e-10));
    CHECK(std::abs(i2) <= monotone_bound(2, g, 0.0, 1.0));
}

TEST_CASE("linearity of D and I_a", "[operators]")
{
    std::vector<double> probes{-1.5, -0.2, 0.6, 1.4};
    auto f = fn("sin(x)");
    auto g = fn("exp(x)");
    for (const auto& op : {Operator::differentiate(), Operator::integrate_from(0.1),
                           ftoc_operator(-0.3)}) {
        INFO(op.to_string());
        auto report = check_linearity(op, f, g, 1.5, -0.75, probes);
        CHECK(report.pass);
        CHECK(report.measured_gap <= 5e-10);
    }
}

TEST_CASE("D on an opaque closure is unsupported", "[operators]")
{
    auto c = RealFunction::from_closure([](double t) { return t; }, domain, "id");
    CHECK_THROWS_AS(apply(Operator::differentiate(), c), UnsupportedDifferentiation);
}
