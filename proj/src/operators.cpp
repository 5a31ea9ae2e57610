#include "taylorlab/operators.hpp"

#include "taylorlab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace taylorlab {

struct Operator::Node
{
    Kind kind;
    double parameter = 0.0;
    int exponent = 1;
    std::vector<Operator> children;
};

Operator::Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Operator Operator::differentiate()
{
    return Operator(std::make_shared<const Node>(Node{Kind::differentiate, 0.0, 1, {}}));
}

Operator Operator::integrate_from(double base)
{
    return Operator(std::make_shared<const Node>(Node{Kind::integrate_from, base, 1, {}}));
}

Operator Operator::evaluate_at(double base)
{
    return Operator(std::make_shared<const Node>(Node{Kind::evaluate_at, base, 1, {}}));
}

Operator Operator::identity()
{
    return Operator(std::make_shared<const Node>(Node{Kind::identity, 0.0, 1, {}}));
}

Operator Operator::scale(double c)
{
    return Operator(std::make_shared<const Node>(Node{Kind::scale, c, 1, {}}));
}

Operator Operator::sum(Operator left, Operator right)
{
    return Operator(std::make_shared<const Node>(
        Node{Kind::sum, 0.0, 1, {std::move(left), std::move(right)}}));
}

Operator Operator::compose(Operator outer, Operator inner)
{
    return Operator(std::make_shared<const Node>(
        Node{Kind::compose, 0.0, 1, {std::move(outer), std::move(inner)}}));
}

Operator Operator::power(Operator inner, int n)
{
    if (n < 1)
        throw PreconditionError("operator power must be >= 1");
    return Operator(std::make_shared<const Node>(Node{Kind::power, 0.0, n, {std::move(inner)}}));
}

Operator::Kind Operator::kind() const noexcept { return node_->kind; }
double Operator::parameter() const noexcept { return node_->parameter; }
int Operator::exponent() const noexcept { return node_->exponent; }

const Operator& Operator::first() const
{
    assert(!node_->children.empty());
    return node_->children[0];
}

const Operator& Operator::second() const
{
    assert(node_->children.size() == 2);
    return node_->children[1];
}

std::string Operator::to_string() const
{
    std::ostringstream out;
    switch (kind()) {
    case Kind::differentiate:
        out << "D";
        break;
    case Kind::integrate_from:
        out << "I[" << parameter() << "]";
        break;
    case Kind::evaluate_at:
        out << "E[" << parameter() << "]";
        break;
    case Kind::identity:
        out << "Id";
        break;
    case Kind::scale:
        out << parameter();
        break;
    case Kind::sum:
        out << "(" << first().to_string() << " + " << second().to_string() << ")";
        break;
    case Kind::compose:
        out << first().to_string() << " " << second().to_string();
        break;
    case Kind::power:
        out << "(" << first().to_string() << ")^" << exponent();
        break;
    }
    return out.str();
}

//---------------------------------------------------------------------------//
// Application
//---------------------------------------------------------------------------//

namespace {

RealFunction apply_integral(double base, const RealFunction& f, const QuadratureConfig& cfg)
{
    if (!f.domain().contains(base))
        throw PreconditionError("integration base outside function domain");
    std::ostringstream label;
    label << "I[" << base << "](" << f.label() << ")";
    return RealFunction::from_closure([f, base, cfg](double x) { return integrate(f, base, x, cfg); },
                                      f.domain(), label.str(), [f] { return f; });
}

RealFunction apply_evaluation(double base, const RealFunction& f)
{
    if (!f.domain().contains(base))
        throw PreconditionError("evaluation point outside function domain");
    return RealFunction::from_expr(Expr::constant(f(base)), f.domain());
}

}  // namespace

RealFunction apply(const Operator& op, const RealFunction& f, const QuadratureConfig& cfg)
{
    using K = Operator::Kind;
    switch (op.kind()) {
    case K::differentiate:
        return f.derivative();
    case K::integrate_from:
        return apply_integral(op.parameter(), f, cfg);
    case K::evaluate_at:
        return apply_evaluation(op.parameter(), f);
    case K::identity:
        return f;
    case K::scale:
        return scale(op.parameter(), f);
    case K::sum:
        return add(apply(op.first(), f, cfg), apply(op.second(), f, cfg));
    case K::compose:
        // D I_a = Id on continuous integrands.
        if (op.first().kind() == K::differentiate && op.second().kind() == K::integrate_from)
            return f;
        return apply(op.first(), apply(op.second(), f, cfg), cfg);
    case K::power: {
        RealFunction result = f;
        for (int i = 0; i < op.exponent(); ++i)
            result = apply(op.first(), result, cfg);
        return result;
    }
    }
    return f;
}

Operator ftoc_operator(double base)
{
    return Operator::sum(Operator::evaluate_at(base),
                         Operator::compose(Operator::integrate_from(base),
                                           Operator::differentiate()));
}

double iterated_integral_one(int n, double base, double x, const QuadratureConfig& cfg)
{
    if (n < 1 || n > max_iterated_integral_depth)
        throw PreconditionError("iterated_integral_one: n must lie in [1, 6]");
    RealFunction one = constant_one(Interval::spanning(base, x));
    return apply(Operator::power(Operator::integrate_from(base), n), one, cfg)(x);
}

double monotone_bound(int n, const RealFunction& g, double base, double x,
                      const QuadratureConfig& cfg)
{
    if (n < 1)
        throw PreconditionError("monotone_bound: n must be >= 1");
    if (x < base)
        throw PreconditionError("monotone_bound: requires x >= a");
    if (x == base)
        return 0.0;
    double factor = 1.0;
    for (int k = 1; k <= n; ++k)
        factor *= (x - base) / k;
    return sup_abs(g, Interval(base, x), cfg) * factor;
}

CheckReport check_linearity(const Operator& op, const RealFunction& f, const RealFunction& g,
                            double alpha, double beta, std::span<const double> probes,
                            const QuadratureConfig& cfg)
{
    RealFunction lhs = apply(op, combine(alpha, f, beta, g), cfg);
    RealFunction op_f = apply(op, f, cfg);
    RealFunction op_g = apply(op, g, cfg);
    double gap = 0.0;
    for (double x : probes)
        gap = std::max(gap, std::abs(lhs(x) - alpha * op_f(x) - beta * op_g(x)));
    auto report = CheckReport::from_gap("linearity of " + op.to_string(), gap,
                                        5.0 * cfg.abs_tolerance);
    report.values.emplace_back("probes", static_cast<double>(probes.size()));
    return report;
}

}  // namespace taylorlab
