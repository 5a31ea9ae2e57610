#include "taylorlab/funcspace.hpp"

#include "taylorlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace taylorlab {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        std::ostringstream msg;
        msg << "invalid interval [" << lo << ", " << hi << "]";
        throw PreconditionError(msg.str());
    }
}

Interval Interval::spanning(double p, double q, double pad)
{
    if (p == q)
        return Interval(p - pad, p + pad);
    return Interval(std::min(p, q), std::max(p, q));
}

Interval Interval::wide() { return Interval(-1e300, 1e300); }

void QuadratureConfig::validate() const
{
    if (!(abs_tolerance >= 1e-14) || !std::isfinite(abs_tolerance))
        throw PreconditionError("abs_tolerance must be finite and >= 1e-14");
    if (!(rel_tolerance >= 0.0) || !std::isfinite(rel_tolerance))
        throw PreconditionError("rel_tolerance must be finite and >= 0");
    if (max_subdivision_depth < 1 || max_subdivision_depth > 60)
        throw PreconditionError("max_subdivision_depth must lie in [1, 60]");
}

//---------------------------------------------------------------------------//
// RealFunction
//---------------------------------------------------------------------------//

struct RealFunction::State
{
    Source source;
    Interval domain;
    std::string label;
    std::optional<Expr> expr;
    Evaluator eval;
    DerivativeThunk derivative;
};

RealFunction::RealFunction(std::shared_ptr<const State> state) : state_(std::move(state)) {}

RealFunction RealFunction::from_expr(Expr e, Interval domain, std::string label)
{
    if (label.empty())
        label = render(e);
    return RealFunction(std::make_shared<const State>(
        State{Source::expression, domain, std::move(label), std::move(e), {}, {}}));
}

RealFunction RealFunction::one(Interval domain)
{
    return RealFunction(std::make_shared<const State>(
        State{Source::constant_one, domain, "1", Expr::constant(1.0), {}, {}}));
}

RealFunction RealFunction::from_closure(Evaluator eval, Interval domain, std::string label,
                                        DerivativeThunk derivative)
{
    return RealFunction(std::make_shared<const State>(State{Source::closure, domain,
                                                            std::move(label), std::nullopt,
                                                            std::move(eval),
                                                            std::move(derivative)}));
}

double RealFunction::operator()(double t) const
{
    const State& s = *state_;
    if (!s.domain.contains(t)) {
        std::ostringstream msg;
        msg << "outside domain [" << s.domain.lo() << ", " << s.domain.hi() << "]";
        throw DomainError(s.label, t, msg.str());
    }
    switch (s.source) {
    case Source::constant_one:
        return 1.0;
    case Source::expression:
        return evaluate(*s.expr, t);
    case Source::closure:
        break;
    }
    return s.eval(t);
}

RealFunction::Source RealFunction::source() const noexcept { return state_->source; }
const Interval& RealFunction::domain() const noexcept { return state_->domain; }
const std::string& RealFunction::label() const noexcept { return state_->label; }
std::optional<Expr> RealFunction::expr() const { return state_->expr; }

bool RealFunction::has_derivative() const noexcept
{
    return state_->source != Source::closure || static_cast<bool>(state_->derivative);
}

RealFunction RealFunction::derivative() const
{
    const State& s = *state_;
    switch (s.source) {
    case Source::constant_one:
        return from_expr(Expr::constant(0.0), s.domain);
    case Source::expression:
        return from_expr(taylorlab::derivative(*s.expr), s.domain);
    case Source::closure:
        break;
    }
    if (!s.derivative)
        throw UnsupportedDifferentiation("no symbolic derivative available for '" + s.label + "'");
    return s.derivative().with_domain(s.domain);
}

RealFunction RealFunction::with_domain(Interval domain) const
{
    State copy = *state_;
    copy.domain = domain;
    return RealFunction(std::make_shared<const State>(std::move(copy)));
}

RealFunction constant_one(Interval domain) { return RealFunction::one(domain); }

RealFunction scale(double c, const RealFunction& f)
{
    std::ostringstream label;
    label << c << "*(" << f.label() << ")";
    if (auto e = f.expr())
        return RealFunction::from_expr(Expr::multiply(Expr::constant(c), *e), f.domain(),
                                       label.str());
    RealFunction::DerivativeThunk derivative;
    if (f.has_derivative())
        derivative = [c, f] { return scale(c, f.derivative()); };
    return RealFunction::from_closure([c, f](double t) { return c * f(t); }, f.domain(),
                                      label.str(), std::move(derivative));
}

RealFunction add(const RealFunction& f, const RealFunction& g)
{
    Interval domain(std::max(f.domain().lo(), g.domain().lo()),
                    std::min(f.domain().hi(), g.domain().hi()));
    std::string label = "(" + f.label() + ") + (" + g.label() + ")";
    auto ef = f.expr();
    auto eg = g.expr();
    if (ef && eg)
        return RealFunction::from_expr(Expr::add(*ef, *eg), domain, std::move(label));
    RealFunction::DerivativeThunk derivative;
    if (f.has_derivative() && g.has_derivative())
        derivative = [f, g] { return add(f.derivative(), g.derivative()); };
    return RealFunction::from_closure([f, g](double t) { return f(t) + g(t); }, domain,
                                      std::move(label), std::move(derivative));
}

RealFunction combine(double alpha, const RealFunction& f, double beta, const RealFunction& g)
{
    return add(scale(alpha, f), scale(beta, g));
}

//---------------------------------------------------------------------------//
// sup_abs
//---------------------------------------------------------------------------//

double sup_abs(const RealFunction& f, const Interval& iv, const QuadratureConfig& cfg)
{
    constexpr int intervals = sup_abs_samples - 1;
    const double lo = iv.lo();
    const double step = iv.length() / intervals;
    auto node = [&](int i) { return i == intervals ? iv.hi() : lo + step * i; };

    int best_index = 0;
    double best = -1.0;
    for (int i = 0; i <= intervals; ++i) {
        double v = std::abs(f(node(i)));
        if (v > best) {
            best = v;
            best_index = i;
        }
    }

    // Golden-section search for a local maximum of |f| around the best sample.
    double left = node(std::max(best_index - 1, 0));
    double right = node(std::min(best_index + 1, intervals));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = right - inv_phi * (right - left);
    double d = left + inv_phi * (right - left);
    double fc = std::abs(f(c));
    double fd = std::abs(f(d));
    const double width_floor = std::max(cfg.abs_tolerance * 1e-2, 1e-15 * iv.length());
    for (int it = 0; it < 200 && right - left > width_floor; ++it) {
        if (fc >= fd) {
            right = d;
            d = c;
            fd = fc;
            c = right - inv_phi * (right - left);
            fc = std::abs(f(c));
        } else {
            left = c;
            c = d;
            fc = fd;
            d = left + inv_phi * (right - left);
            fd = std::abs(f(d));
        }
        best = std::max({best, fc, fd});
    }
    return best;
}

}  // namespace taylorlab
