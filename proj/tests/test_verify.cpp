#include "taylorlab/errors.hpp"
#include "taylorlab/verify.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace taylorlab;

TEST_CASE("every suite passes on the default pool", "[verify]")
{
    for (const auto& name : verify::suite_names()) {
        auto result = verify::run_suite(name);
        INFO(name);
        CHECK(result.suite == name);
        CHECK_FALSE(result.checks.empty());
        for (const auto& c : result.checks) {
            INFO(c.name << " gap " << c.measured_gap << " threshold " << c.threshold);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("a perturbed basis is caught and nothing else moves", "[verify]")
{
    verify::Options opt;
    opt.perturb_basis = 1e-3;
    auto result = verify::run_suite("operators", opt);
    CHECK_FALSE(result.pass());
    for (const auto& c : result.checks)
        CHECK(c.pass == (c.name != "basis_closed_form"));
}

TEST_CASE("suite filtering", "[verify]")
{
    auto only = verify::run_suites({}, "simplex");
    REQUIRE(only.size() == 1);
    CHECK(only.front().suite == "simplex");
    CHECK_THROWS_AS(verify::run_suite("nope"), PreconditionError);
}

TEST_CASE("pool probes are interior and evenly spaced", "[verify]")
{
    for (const auto& pf : verify::remainder_pool()) {
        auto probes = pf.probes();
        REQUIRE(probes.size() == 10);
        CHECK(std::is_sorted(probes.begin(), probes.end()));
        CHECK(probes.front() > pf.lo);
        CHECK(probes.back() < pf.hi);
    }
}
