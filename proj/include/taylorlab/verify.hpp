#pragma once

#include "taylorlab/check_report.hpp"
#include "taylorlab/expr.hpp"
#include "taylorlab/funcspace.hpp"
#include "taylorlab/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taylorlab::verify {

/// Test pool entry: f, an expansion base, and an interval of probe points
/// on which sup |f^(N+1)| ≤ 1e3 for N ≤ 5.
struct PoolFunction
{
    std::string text;
    Expr f;
    double base;
    double lo;
    double hi;

    /// `count` evenly spaced interior probes of [lo, hi].
    std::vector<double> probes(int count = 10) const;
};

/// exp, sin, cos, x^5, (1+x)^(-1), ln(1+x).
std::vector<PoolFunction> remainder_pool();

/// Random expression over the full grammar, with tame constants and exponents.
Expr random_expression(RngCursor& rng, int depth);

struct Options
{
    QuadratureConfig quadrature{};
    std::uint64_t seed = 0x5eed'2024;
    /// Fault injection: the basis-identity check scales I_a^n 1 by (1 + ε).
    double perturb_basis = 0.0;
};

struct SuiteResult
{
    std::string suite;
    std::vector<CheckReport> checks;

    bool pass() const;
};

/// expr, funcspace, operators, taylor, simplex, fixedpoint.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const Options& options = {});

/// All suites, or only `only` when given.
std::vector<SuiteResult> run_suites(const Options& options = {},
                                    std::optional<std::string> only = std::nullopt);

}  // namespace taylorlab::verify
