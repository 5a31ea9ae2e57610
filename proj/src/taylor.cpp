#include "taylorlab/taylor.hpp"

#include "taylorlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace taylorlab {

TaylorExpansion::TaylorExpansion(double base, std::vector<double> coefficients,
                                 std::vector<Expr> exprs)
    : base_(base), coefficients_(std::move(coefficients)), derivative_exprs_(std::move(exprs))
{
}

TaylorExpansion TaylorExpansion::start(Expr f, double base)
{
    double value = evaluate(f, base);
    Expr first = derivative(f);
    return TaylorExpansion(base, {value}, {std::move(f), std::move(first)});
}

Operator TaylorExpansion::residual_operator() const
{
    int k = order() + 1;
    return Operator::compose(Operator::power(Operator::integrate_from(base_), k),
                             Operator::power(Operator::differentiate(), k));
}

TaylorExpansion ftoc_step(const TaylorExpansion& partial)
{
    std::vector<double> coefficients = partial.coefficients_;
    std::vector<Expr> exprs = partial.derivative_exprs_;
    coefficients.push_back(evaluate(exprs.back(), partial.base_));
    exprs.push_back(derivative(exprs.back()));
    return TaylorExpansion(partial.base_, std::move(coefficients), std::move(exprs));
}

TaylorExpansion expand(const Expr& f, double base, int order)
{
    if (order < 0 || order > max_expansion_order)
        throw PreconditionError("expansion order must lie in [0, 12]");
    TaylorExpansion t = TaylorExpansion::start(f, base);
    for (int n = 0; n < order; ++n)
        t = ftoc_step(t);
    return t;
}

double evaluate_polynomial(const TaylorExpansion& t, double x)
{
    const auto& c = t.coefficients();
    const double h = x - t.base();
    // c0 + h(c1 + h/2 (c2 + h/3 (c3 + ...)))
    double p = c.back();
    for (std::size_t n = c.size() - 1; n > 0; --n)
        p = c[n - 1] + p * h / static_cast<double>(n);
    return p;
}

double remainder_direct(const TaylorExpansion& t, double x)
{
    return evaluate(t.source(), x) - evaluate_polynomial(t, x);
}

namespace {

// (x − t)^N / N!
double remainder_kernel(double x, double t, int order)
{
    double k = 1.0;
    for (int i = 1; i <= order; ++i)
        k *= (x - t) / i;
    return k;
}

double factorial_scaled_power(double h, int n)
{
    double v = 1.0;
    for (int i = 1; i <= n; ++i)
        v *= h / i;
    return v;
}

}  // namespace

double remainder_exact(const TaylorExpansion& t, double x, const QuadratureConfig& cfg)
{
    const Expr& integrand = t.residual_integrand();
    const int order = t.order();
    if (integrand.is_constant(0.0)) {
        cfg.validate();
        return 0.0;
    }
    return integrate(
        [&](double s) { return remainder_kernel(x, s, order) * evaluate(integrand, s); },
        t.base(), x, cfg);
}

double remainder_nested(const TaylorExpansion& t, double x, const QuadratureConfig& cfg)
{
    const int depth = t.order() + 1;
    if (depth > max_nested_depth)
        throw PreconditionError("remainder_nested: requires N+1 <= 4");
    if (x == t.base()) {
        cfg.validate();
        return 0.0;
    }
    QuadratureConfig level = cfg;
    level.abs_tolerance = std::max(cfg.abs_tolerance, nested_level_tolerance);
    RealFunction f = RealFunction::from_expr(t.source(), Interval::spanning(t.base(), x));
    return apply(t.residual_operator(), f, level)(x);
}

double remainder_bound(const TaylorExpansion& t, double x, const QuadratureConfig& cfg)
{
    if (x == t.base())
        return 0.0;
    const Expr& integrand = t.residual_integrand();
    if (integrand.is_constant(0.0))
        return 0.0;
    Interval span = Interval::spanning(t.base(), x);
    double sup = sup_abs(RealFunction::from_expr(integrand, span), span, cfg);
    return sup * factorial_scaled_power(span.length(), t.order() + 1);
}

//---------------------------------------------------------------------------//
// Order exchange
//---------------------------------------------------------------------------//

BivariateIntegrand BivariateIntegrand::separable(const Expr& in_ti, const Expr& in_tj)
{
    return BivariateIntegrand{
        "(" + render(in_ti) + ")[t_i] * (" + render(in_tj) + ")[t_j]",
        [in_ti, in_tj](double ti, double tj) { return evaluate(in_ti, ti) * evaluate(in_tj, tj); }};
}

std::vector<BivariateIntegrand> BivariateIntegrand::built_in()
{
    return {
        {"exp(t_i - t_j)", [](double ti, double tj) { return std::exp(ti - tj); }},
        {"sin(t_i * t_j)", [](double ti, double tj) { return std::sin(ti * tj); }},
        {"(t_j - t_i)^2", [](double ti, double tj) { return (tj - ti) * (tj - ti); }},
        {"1 / (1 + t_i^2 + t_j^2)",
         [](double ti, double tj) { return 1.0 / (1.0 + ti * ti + tj * tj); }},
        {"cos(t_i + 2 t_j)", [](double ti, double tj) { return std::cos(ti + 2.0 * tj); }},
    };
}

CheckReport verify_exchange(const BivariateIntegrand& g, double base, double upper,
                            const QuadratureConfig& cfg)
{
    // Inner variable t_i, outer t_j: region a ≤ t_i ≤ t_j ≤ u.
    double inner_first = integrate(
        [&](double tj) {
            return integrate([&](double ti) { return g.eval(ti, tj); }, base, tj, cfg);
        },
        base, upper, cfg);
    // Same region with t_j innermost: t_i ≤ t_j ≤ u.
    double exchanged = integrate(
        [&](double ti) {
            return integrate([&](double tj) { return g.eval(ti, tj); }, ti, upper, cfg);
        },
        base, upper, cfg);
    auto report = CheckReport::from_gap("exchange " + g.label, std::abs(inner_first - exchanged),
                                        10.0 * cfg.abs_tolerance);
    report.values = {{"dt_i_first", inner_first}, {"dt_j_first", exchanged}};
    return report;
}

//---------------------------------------------------------------------------//
// Report
//---------------------------------------------------------------------------//

double max_pairwise_gap(std::initializer_list<std::optional<double>> values)
{
    double lo = HUGE_VAL;
    double hi = -HUGE_VAL;
    for (const auto& v : values) {
        if (!v)
            continue;
        lo = std::min(lo, *v);
        hi = std::max(hi, *v);
    }
    return hi >= lo ? hi - lo : 0.0;
}

RemainderReport remainder_report(const Expr& f, double base, int order, double x,
                                 const QuadratureConfig& cfg)
{
    TaylorExpansion t = expand(f, base, order);
    RemainderReport r;
    r.x = x;
    r.order = order;
    r.direct = remainder_direct(t, x);
    r.exact_integral = remainder_exact(t, x, cfg);
    if (order + 1 <= max_nested_depth)
        r.nested_integral = remainder_nested(t, x, cfg);
    r.bound = remainder_bound(t, x, cfg);
    r.max_pairwise_gap = max_pairwise_gap({r.direct, r.exact_integral, r.nested_integral});
    return r;
}

}  // namespace taylorlab
