#include "taylorlab/verify.hpp"

#include "taylorlab/errors.hpp"
#include "taylorlab/fixedpoint.hpp"
#include "taylorlab/operators.hpp"
#include "taylorlab/simplex.hpp"
#include "taylorlab/taylor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

namespace taylorlab::verify {

std::vector<double> PoolFunction::probes(int count) const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.push_back(lo + (hi - lo) * (k + 0.5) / count);
    return out;
}

std::vector<PoolFunction> remainder_pool()
{
    auto entry = [](const char* text, double base, double lo, double hi) {
        return PoolFunction{text, parse(text), base, lo, hi};
    };
    return {
        entry("exp(x)", 0.0, -1.0, 1.5),
        entry("sin(x)", 0.3, -2.0, 2.0),
        entry("cos(x)", 0.0, -2.0, 2.0),
        entry("x^5", 0.5, -1.0, 1.5),
        entry("(1 + x)^(-1)", 0.5, 0.0, 1.5),
        entry("ln(1 + x)", 0.5, 0.0, 1.5),
    };
}

namespace {

std::size_t pick(RngCursor& rng, std::size_t n)
{
    return std::min(n - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)));
}

}  // namespace

Expr random_expression(RngCursor& rng, int depth)
{
    static constexpr std::array<double, 7> constants = {0.0, 1.0, -1.0, 2.0, 0.5, 3.0, 1.25};
    static constexpr std::array<double, 7> exponents = {2.0, 3.0, -1.0, 0.5, -2.0, 1.0, 0.0};
    if (depth <= 0 || rng.uniform() < 0.2) {
        if (rng.uniform() < 0.6)
            return Expr::variable();
        return Expr::constant(constants[pick(rng, constants.size())]);
    }
    switch (pick(rng, 10)) {
    case 0: return Expr::add(random_expression(rng, depth - 1), random_expression(rng, depth - 1));
    case 1: return Expr::subtract(random_expression(rng, depth - 1), random_expression(rng, depth - 1));
    case 2: return Expr::multiply(random_expression(rng, depth - 1), random_expression(rng, depth - 1));
    case 3: return Expr::divide(random_expression(rng, depth - 1), random_expression(rng, depth - 1));
    case 4: return Expr::negate(random_expression(rng, depth - 1));
    case 5: return Expr::power(random_expression(rng, depth - 1), exponents[pick(rng, exponents.size())]);
    case 6: return Expr::sin(random_expression(rng, depth - 1));
    case 7: return Expr::cos(random_expression(rng, depth - 1));
    case 8: return Expr::exp(random_expression(rng, depth - 1));
    default: return Expr::ln(random_expression(rng, depth - 1));
    }
}

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

namespace {

template <class F>
std::optional<double> try_eval(F&& f)
{
    try {
        return f();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

//---------------------------------------------------------------------------//
// expr
//---------------------------------------------------------------------------//

SuiteResult expr_suite(const Options& opt)
{
    SuiteResult out{"expr", {}};
    RngCursor rng(CounterRng(opt.seed).split(1));

    // Symbolic derivative against a central difference with h = 1e-5.
    {
        const double h = 1e-5;
        int accepted = 0;
        int attempts = 0;
        double worst = 0.0;
        while (accepted < 200 && attempts < 100000) {
            ++attempts;
            Expr e = random_expression(rng, 3);
            double x = rng.uniform(-2.0, 2.0);
            auto fp = try_eval([&] { return evaluate(e, x + h); });
            auto fm = try_eval([&] { return evaluate(e, x - h); });
            auto f0 = try_eval([&] { return evaluate(e, x); });
            auto wide_p = try_eval([&] { return evaluate(e, x + 1e-2); });
            auto wide_m = try_eval([&] { return evaluate(e, x - 1e-2); });
            auto d = try_eval([&] { return evaluate(differentiate(e), x); });
            if (!fp || !fm || !f0 || !wide_p || !wide_m || !d)
                continue;
            // Keep away from poles and branch points, where the difference quotient is meaningless.
            if (std::max({std::abs(*f0), std::abs(*wide_p), std::abs(*wide_m)}) > 1e3)
                continue;
            ++accepted;
            double fd = (*fp - *fm) / (2.0 * h);
            worst = std::max(worst, std::abs(*d - fd) / (1.0 + std::abs(*d)));
        }
        auto r = CheckReport::from_gap("derivative_vs_finite_difference", worst, 1e-5);
        r.pass = r.pass && accepted == 200;
        r.values = {{"pairs", static_cast<double>(accepted)}};
        out.checks.push_back(std::move(r));
    }

    // simplify must be bit-preserving wherever the input evaluates.
    {
        int mismatches = 0;
        int compared = 0;
        for (int i = 0; i < 100; ++i) {
            Expr e = random_expression(rng, 4);
            for (const Expr& candidate : {e, differentiate(e)}) {
                Expr s = simplify(candidate);
                for (int k = 0; k < 100; ++k) {
                    double x = rng.uniform(-3.0, 3.0);
                    auto original = try_eval([&] { return evaluate(candidate, x); });
                    if (!original)
                        continue;
                    auto simplified = try_eval([&] { return evaluate(s, x); });
                    ++compared;
                    if (!simplified || *simplified != *original)
                        ++mismatches;
                }
            }
        }
        auto r = CheckReport::from_gap("simplify_preserves_value", mismatches, 0.0);
        r.values = {{"comparisons", static_cast<double>(compared)}};
        out.checks.push_back(std::move(r));
    }

    // render then parse reproduces the tree.
    {
        int mismatches = 0;
        for (int i = 0; i < 300; ++i) {
            Expr e = random_expression(rng, 4);
            if (i % 2 == 1)
                e = simplify(differentiate(e));
            try {
                if (!structurally_equal(parse(render(e)), e))
                    ++mismatches;
            } catch (const ParseError&) {
                ++mismatches;
            }
        }
        out.checks.push_back(CheckReport::from_gap("parse_render_roundtrip", mismatches, 0.0));
    }
    return out;
}

//---------------------------------------------------------------------------//
// funcspace
//---------------------------------------------------------------------------//

std::vector<RealFunction> function_pool(Interval domain)
{
    std::vector<RealFunction> pool;
    for (const char* text : {"sin(x)", "exp(x)", "cos(3*x)", "x^3 - x", "(2 + x)^(-1)", "ln(3 + x)"})
        pool.push_back(RealFunction::from_expr(parse(text), domain, text));
    pool.push_back(constant_one(domain));
    return pool;
}

SuiteResult funcspace_suite(const Options& opt)
{
    SuiteResult out{"funcspace", {}};
    const QuadratureConfig& cfg = opt.quadrature;
    RngCursor rng(CounterRng(opt.seed).split(2));
    const Interval domain(-1.0, 1.0);
    auto pool = function_pool(domain);

    double linearity = 0.0;
    double monotonicity = -HUGE_VAL;
    double additivity = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto& f = pool[pick(rng, pool.size())];
        const auto& g = pool[pick(rng, pool.size())];
        double alpha = rng.uniform(-2.0, 2.0);
        double beta = rng.uniform(-2.0, 2.0);
        double a = rng.uniform(-1.0, 1.0);
        double x = rng.uniform(-1.0, 1.0);
        double c = rng.uniform(-1.0, 1.0);

        double lhs = integrate(combine(alpha, f, beta, g), a, x, cfg);
        linearity = std::max(linearity, std::abs(lhs - alpha * integrate(f, a, x, cfg)
                                                 - beta * integrate(g, a, x, cfg)));

        // f + |g| dominates f pointwise.
        double lo = std::min(a, x);
        double hi = std::max(a, x);
        RealFunction dominating = RealFunction::from_closure(
            [f, g](double t) { return f(t) + std::abs(g(t)); }, domain, "f + |g|");
        monotonicity = std::max(monotonicity, integrate(f, lo, hi, cfg)
                                                  - integrate(dominating, lo, hi, cfg));

        additivity = std::max(additivity, std::abs(integrate(f, a, c, cfg) + integrate(f, c, x, cfg)
                                                   - integrate(f, a, x, cfg)));
    }
    out.checks.push_back(CheckReport::from_gap("integrate_linearity", linearity, 3.0 * cfg.abs_tolerance));
    out.checks.push_back(
        CheckReport::from_gap("integrate_monotonicity", monotonicity, 2.0 * cfg.abs_tolerance));
    out.checks.push_back(CheckReport::from_gap("integrate_additivity", additivity, 3.0 * cfg.abs_tolerance));

    double dominance = -HUGE_VAL;
    for (const auto& f : pool) {
        double sup = sup_abs(f, domain, cfg);
        for (int k = 0; k < 100; ++k) {
            double t = rng.uniform(-1.0, 1.0);
            dominance = std::max(dominance, std::abs(f(t)) - sup);
        }
    }
    out.checks.push_back(CheckReport::from_gap("sup_abs_dominance", dominance, 1e-12));
    return out;
}

//---------------------------------------------------------------------------//
// operators
//---------------------------------------------------------------------------//

SuiteResult operators_suite(const Options& opt)
{
    SuiteResult out{"operators", {}};
    const QuadratureConfig& cfg = opt.quadrature;
    RngCursor rng(CounterRng(opt.seed).split(3));
    const Interval domain(-1.0, 1.0);
    auto pool = function_pool(domain);
    const double a = 0.25;

    {
        const std::array<Operator, 4> atoms = {Operator::differentiate(), Operator::integrate_from(a),
                                               Operator::evaluate_at(a), Operator::scale(-1.5)};
        double gap = 0.0;
        for (int trial = 0; trial < 12; ++trial) {
            const Operator& j = atoms[pick(rng, atoms.size())];
            const Operator& k = atoms[pick(rng, atoms.size())];
            const Operator& l = atoms[pick(rng, atoms.size())];
            const RealFunction& f = pool[pick(rng, pool.size())];
            RealFunction right = apply(Operator::compose(j, Operator::compose(k, l)), f, cfg);
            RealFunction left = apply(Operator::compose(Operator::compose(j, k), l), f, cfg);
            for (int p = 0; p < 50; ++p) {
                double x = -0.95 + 1.9 * (p + 0.5) / 50.0;
                gap = std::max(gap, std::abs(right(x) - left(x)));
            }
        }
        out.checks.push_back(CheckReport::from_gap("associativity", gap, 5.0 * cfg.abs_tolerance));
    }

    {
        double gap = 0.0;
        const Operator ftoc = ftoc_operator(a);
        for (const auto& f : pool) {
            RealFunction lf = apply(ftoc, f, cfg);
            for (int p = 0; p < 20; ++p) {
                double x = -0.95 + 1.9 * (p + 0.5) / 20.0;
                gap = std::max(gap, std::abs(lf(x) - f(x)));
            }
        }
        out.checks.push_back(CheckReport::from_gap("ftoc_fixed_point", gap, 5.0 * cfg.abs_tolerance));
    }

    {
        // Worst ratio |I_a^n g| / (bound·(1 + 1e-9)); must stay ≤ 1.
        double worst = 0.0;
        for (const auto& g : pool) {
            for (int n = 1; n <= 3; ++n) {
                RealFunction integrated = apply(Operator::power(Operator::integrate_from(a), n), g, cfg);
                for (int p = 0; p < 20; ++p) {
                    double x = a + (1.0 - a) * (p + 1) / 20.0;
                    double bound = monotone_bound(n, g, a, x, cfg) * (1.0 + 1e-9);
                    double value = std::abs(integrated(x));
                    worst = std::max(worst, bound > 0.0 ? value / bound : (value > 0.0 ? HUGE_VAL : 0.0));
                }
            }
        }
        out.checks.push_back(CheckReport::from_gap("monotone_bound", worst, 1.0));
    }

    {
        double gap = 0.0;
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                double base = rng.uniform(-2.0, 2.0);
                double x = base + rng.uniform(-2.0, 2.0);
                double closed = std::pow(x - base, n) / static_cast<double>(factorial(n));
                double numeric = iterated_integral_one(n, base, x, cfg) * (1.0 + opt.perturb_basis);
                gap = std::max(gap, std::abs(numeric - closed));
            }
        }
        out.checks.push_back(CheckReport::from_gap("basis_closed_form", gap, 10.0 * cfg.abs_tolerance));
    }
    return out;
}

//---------------------------------------------------------------------------//
// taylor
//---------------------------------------------------------------------------//

SuiteResult taylor_suite(const Options& opt)
{
    SuiteResult out{"taylor", {}};
    const QuadratureConfig& cfg = opt.quadrature;
    const auto pool = remainder_pool();

    double agreement = 0.0;
    double nested = 0.0;
    double bound_ratio = 0.0;
    for (const auto& pf : pool) {
        for (int order = 0; order <= 5; ++order) {
            TaylorExpansion t = expand(pf.f, pf.base, order);
            for (double x : pf.probes()) {
                double direct = remainder_direct(t, x);
                double exact = remainder_exact(t, x, cfg);
                agreement = std::max(agreement, std::abs(exact - direct)
                                                    / std::max(1e-8, 1e-6 * std::abs(direct)));
                if (order + 1 <= 3)
                    nested = std::max(nested, std::abs(remainder_nested(t, x, cfg) - exact));
                if (x >= pf.base) {
                    double allowed = remainder_bound(t, x, cfg) * (1.0 + 1e-9) + 1e-12;
                    bound_ratio = std::max(bound_ratio, std::abs(direct) / allowed);
                }
            }
        }
    }
    out.checks.push_back(CheckReport::from_gap("remainder_agreement", agreement, 1.0));
    out.checks.push_back(CheckReport::from_gap("nested_exchange_agreement", nested, 1e-6));
    out.checks.push_back(CheckReport::from_gap("bound_validity", bound_ratio, 1.0));

    {
        const Expr f = parse("exp(x)");
        double gap = 0.0;
        for (int order = 0; order < 10; ++order) {
            double ratio = remainder_bound(expand(f, 0.0, order + 1), 0.5, cfg)
                           / remainder_bound(expand(f, 0.0, order), 0.5, cfg);
            gap = std::max(gap, std::abs(ratio - 0.5 / (order + 2)));
        }
        out.checks.push_back(CheckReport::from_gap("bound_rate", gap, 1e-9));
    }

    {
        double worst = 0.0;
        for (const auto& [text, degree] : std::vector<std::pair<const char*, int>>{
                 {"x^3", 3}, {"3*x^2 - 2*x + 1", 2}, {"(x - 1)*(x + 2)", 2}, {"x^4 - x", 4}, {"7", 0}}) {
            Expr f = parse(text);
            for (int order = degree; order <= degree + 1; ++order) {
                TaylorExpansion t = expand(f, 0.5, order);
                for (double x : {-0.75, 0.5, 1.25, 2.0}) {
                    worst = std::max({worst, std::abs(remainder_direct(t, x)),
                                      std::abs(remainder_exact(t, x, cfg)), remainder_bound(t, x, cfg)});
                    if (order + 1 <= max_nested_depth)
                        worst = std::max(worst, std::abs(remainder_nested(t, x, cfg)));
                }
            }
        }
        out.checks.push_back(CheckReport::from_gap("polynomial_exactness", worst, 10.0 * cfg.abs_tolerance));
    }

    {
        int mismatches = 0;
        for (const auto& pf : pool) {
            for (int order = 0; order < 8; ++order) {
                auto stepped = ftoc_step(expand(pf.f, pf.base, order)).coefficients();
                auto direct = expand(pf.f, pf.base, order + 1).coefficients();
                if (stepped != direct)
                    ++mismatches;
            }
        }
        out.checks.push_back(CheckReport::from_gap("fixed_point_consistency", mismatches, 0.0));
    }
    return out;
}

//---------------------------------------------------------------------------//
// simplex
//---------------------------------------------------------------------------//

SuiteResult simplex_suite(const Options& opt)
{
    SuiteResult out{"simplex", {}};
    const QuadratureConfig& cfg = opt.quadrature;

    {
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n) {
            auto est = simplex_volume_montecarlo({n, 0.0, 1.0}, {1'000'000, opt.seed + static_cast<std::uint64_t>(n)});
            double exact = 1.0 / static_cast<double>(factorial(n));
            worst = std::max(worst, std::abs(est.estimate - exact) / est.std_error);
        }
        out.checks.push_back(CheckReport::from_gap("exact_vs_montecarlo", worst, 4.0));
    }

    {
        PartitionReport p = ordering_partition_check(3, {600'000, opt.seed});
        for (auto& c : p.checks())
            out.checks.push_back(std::move(c));
    }

    {
        RngCursor rng(CounterRng(opt.seed).split(5));
        const auto pool = remainder_pool();
        double gap = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto& pf = pool[pick(rng, pool.size())];
            int order = static_cast<int>(pick(rng, 4));
            double x = rng.uniform(pf.lo, pf.hi);
            double direct = remainder_direct(expand(pf.f, pf.base, order), x);
            gap = std::max(gap, std::abs(remainder_by_slicing(pf.f, pf.base, order, x, cfg) - direct));
        }
        out.checks.push_back(CheckReport::from_gap("slicing_consistency", gap, 1e-8));

        // The slice kernel against the iterated integral I_t^N 1 evaluated at x.
        double kernel_gap = 0.0;
        for (int order = 1; order <= 4; ++order) {
            for (int trial = 0; trial < 5; ++trial) {
                double base = rng.uniform(-1.0, 1.0);
                double x = base + rng.uniform(0.1, 2.0);
                double t = rng.uniform(base, x);
                kernel_gap = std::max(kernel_gap, std::abs(sliced_simplex_volume(order, t, base, x)
                                                           - iterated_integral_one(order, t, x, cfg)));
            }
        }
        out.checks.push_back(CheckReport::from_gap("slice_volume", kernel_gap, 10.0 * cfg.abs_tolerance));
    }

    {
        double gap = 0.0;
        for (int n = 2; n <= SimplexSpec::max_dimension; ++n) {
            double ratio = simplex_volume_exact({n, -0.5, 1.5}) / simplex_volume_exact({n - 1, -0.5, 1.5});
            gap = std::max(gap, std::abs(ratio - 2.0 / n));
        }
        out.checks.push_back(CheckReport::from_gap("dimensional_recursion", gap, 1e-12));
    }
    return out;
}

//---------------------------------------------------------------------------//
// fixedpoint
//---------------------------------------------------------------------------//

int trace_violations(const auto& trace, double tol)
{
    int bad = 0;
    if (trace.residuals.size() != static_cast<std::size_t>(trace.iterations_used))
        ++bad;
    if (trace.iterates.size() != static_cast<std::size_t>(trace.iterations_used) + 1)
        ++bad;
    if (trace.converged && (trace.residuals.empty() || trace.residuals.back() > tol))
        ++bad;
    return bad;
}

SuiteResult fixedpoint_suite(const Options& opt)
{
    SuiteResult out{"fixedpoint", {}};
    RngCursor rng(CounterRng(opt.seed).split(6));
    int violations = 0;

    {
        const double tol = 1e-10;
        ScalarTrace trace = newton(parse("x^2 - 2"), 1.0, tol, 20);
        violations += trace_violations(trace, tol);
        const double root = std::sqrt(2.0);
        double gap = 0.0;
        // e_{k+1}/e_k^2 for k = 1..3; the asymptotic value is 1/(2√2).
        for (std::size_t k = 1; k <= 3 && k + 1 < trace.iterates.size(); ++k) {
            double ek = std::abs(trace.iterates[k] - root);
            double next = std::abs(trace.iterates[k + 1] - root);
            gap = std::max(gap, std::abs(next / (ek * ek) - 0.4));
        }
        auto r = CheckReport::from_gap("newton_quadratic_convergence", gap, 0.2);
        r.pass = r.pass && trace.iterates.size() >= 5;
        out.checks.push_back(std::move(r));
    }

    {
        double gap = 0.0;
        int failures = 0;
        for (int trial = 0; trial < 20; ++trial) {
            // (x − r)(x² + bx + c) with b² < 4c has the single real root r.
            double r = rng.uniform(-2.0, 2.0);
            double b = rng.uniform(-1.0, 1.0);
            double c = b * b / 4.0 + rng.uniform(0.5, 2.0);
            Expr x = Expr::variable();
            Expr f = Expr::multiply(Expr::subtract(x, Expr::constant(r)),
                                    Expr::add(Expr::add(Expr::power(x, 2.0), Expr::multiply(Expr::constant(b), x)),
                                              Expr::constant(c)));
            const double tol = 1e-12;
            ScalarTrace trace = newton(f, r + 0.4, tol, 100);
            violations += trace_violations(trace, tol);
            if (!trace.converged) {
                ++failures;
                continue;
            }
            double root = trace.iterates.back();
            gap = std::max(gap, std::abs(root_as_fixed_point(f)(root) - root));
        }
        auto rep = CheckReport::from_gap("fixed_point_equivalence", gap, 1e-9);
        rep.pass = rep.pass && failures == 0;
        out.checks.push_back(std::move(rep));
    }

    {
        double worst = 0.0;
        const double tol = 1e-10;
        for (int d : {2, 3, 4, 6}) {
            // Q diag(λ) Qᵀ with a well separated dominant eigenvalue.
            std::vector<std::vector<double>> q;
            while (static_cast<int>(q.size()) < d) {
                std::vector<double> v(static_cast<std::size_t>(d));
                for (double& c : v)
                    c = rng.uniform(-1.0, 1.0);
                for (const auto& u : q) {
                    double proj = 0.0;
                    for (int i = 0; i < d; ++i)
                        proj += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
                    for (int i = 0; i < d; ++i)
                        v[static_cast<std::size_t>(i)] -= proj * u[static_cast<std::size_t>(i)];
                }
                double len = 0.0;
                for (double c : v)
                    len += c * c;
                len = std::sqrt(len);
                if (len < 1e-3)
                    continue;
                for (double& c : v)
                    c /= len;
                q.push_back(std::move(v));
            }
            std::vector<double> lambda(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                lambda[static_cast<std::size_t>(i)] = i == 0 ? -5.0 : 2.0 / (i + 1);
            std::vector<double> entries(static_cast<std::size_t>(d * d), 0.0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        entries[static_cast<std::size_t>(i * d + j)] += q[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]
                                                                         * lambda[static_cast<std::size_t>(k)]
                                                                         * q[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            SmallMatrix m(d, entries);
            std::vector<double> v0(static_cast<std::size_t>(d), 1.0);
            PowerMethodResult res = power_method(m, v0, tol, 2000);
            violations += trace_violations(res.trace, tol);
            if (!res.trace.converged) {
                worst = HUGE_VAL;
                continue;
            }
            auto mv = m.multiply(res.eigenvector);
            double resid = 0.0;
            for (int i = 0; i < d; ++i)
                resid = std::max(resid, std::abs(mv[static_cast<std::size_t>(i)]
                                                 - res.eigenvalue * res.eigenvector[static_cast<std::size_t>(i)]));
            worst = std::max(worst, resid / (10.0 * tol * std::abs(res.eigenvalue)));
        }
        out.checks.push_back(CheckReport::from_gap("power_method_residual", worst, 1.0));
    }

    {
        // Non-converging runs must still produce consistent traces.
        auto doubling = RealFunction::from_expr(parse("2*x"), Interval::wide());
        violations += trace_violations(iterate_scalar(doubling, 1.0, 1e-10, 50), 1e-10);
        auto cosine = RealFunction::from_expr(parse("cos(x)"), Interval::wide());
        violations += trace_violations(iterate_scalar(cosine, 1.0, 1e-10, 200), 1e-10);
        SmallMatrix swap(2, {0.0, 1.0, 1.0, 0.0});
        violations += trace_violations(power_method(swap, {1.0, 0.0}, 1e-10, 50).trace, 1e-10);
        out.checks.push_back(CheckReport::from_gap("trace_integrity", violations, 0.0));
    }
    return out;
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::map<std::string, SuiteFn, std::less<>>& registry()
{
    static const std::map<std::string, SuiteFn, std::less<>> suites = {
        {"expr", &expr_suite},           {"funcspace", &funcspace_suite},
        {"operators", &operators_suite}, {"taylor", &taylor_suite},
        {"simplex", &simplex_suite},     {"fixedpoint", &fixedpoint_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"expr",   "funcspace", "operators",
                                                   "taylor", "simplex",   "fixedpoint"};
    return names;
}

SuiteResult run_suite(std::string_view name, const Options& options)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw PreconditionError("unknown suite '" + std::string(name) + "'");
    return it->second(options);
}

std::vector<SuiteResult> run_suites(const Options& options, std::optional<std::string> only)
{
    std::vector<SuiteResult> results;
    if (only) {
        results.push_back(run_suite(*only, options));
        return results;
    }
    for (const auto& name : suite_names())
        results.push_back(run_suite(name, options));
    return results;
}

}  // namespace taylorlab::verify
