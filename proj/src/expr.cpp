#include "taylorlab/expr.hpp"

#include "taylorlab/errors.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <charconv>
#include <cmath>
#include <optional>
#include <system_error>
#include <vector>

namespace taylorlab {

struct Expr::Node
{
    Kind kind;
    double value = 0.0;
    std::vector<Expr> children;
    int arity = 0;
};

namespace {

int arity_of(Expr::Kind k)
{
    switch (k) {
    case Expr::Kind::constant:
    case Expr::Kind::variable:
        return 0;
    case Expr::Kind::add:
    case Expr::Kind::subtract:
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
        return 2;
    default:
        return 1;
    }
}

}  // namespace

Expr::Expr() : Expr(constant(0.0)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(double value)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable()
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    return Expr(std::move(n));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> make_node(Expr::Kind k)
{
    auto n = std::make_shared<NodeT>();
    n->kind = k;
    n->arity = arity_of(k);
    return n;
}

}  // namespace

#define TAYLORLAB_BINARY(NAME, KIND)                    \
    Expr Expr::NAME(Expr lhs, Expr rhs)                 \
    {                                                   \
        auto n = make_node<Node>(Kind::KIND);           \
        n->children = {std::move(lhs), std::move(rhs)}; \
        return Expr(std::move(n));                      \
    }

#define TAYLORLAB_UNARY(NAME, KIND)                     \
    Expr Expr::NAME(Expr operand)                       \
    {                                                   \
        auto n = make_node<Node>(Kind::KIND);           \
        n->children = {std::move(operand)};             \
        return Expr(std::move(n));                      \
    }

TAYLORLAB_BINARY(add, add)
TAYLORLAB_BINARY(subtract, subtract)
TAYLORLAB_BINARY(multiply, multiply)
TAYLORLAB_BINARY(divide, divide)
TAYLORLAB_UNARY(negate, negate)
TAYLORLAB_UNARY(sin, sin)
TAYLORLAB_UNARY(cos, cos)
TAYLORLAB_UNARY(exp, exp)
TAYLORLAB_UNARY(ln, ln)

#undef TAYLORLAB_BINARY
#undef TAYLORLAB_UNARY

Expr Expr::power(Expr base, double exponent)
{
    auto n = make_node<Node>(Kind::power);
    n->children = {std::move(base)};
    n->value = exponent;
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
int Expr::arity() const noexcept { return node_->arity; }

const Expr& Expr::lhs() const
{
    assert(arity() >= 1);
    return node_->children[0];
}

const Expr& Expr::rhs() const
{
    assert(arity() == 2);
    return node_->children[1];
}

std::size_t Expr::size() const noexcept
{
    std::size_t total = 1;
    for (int i = 0; i < arity(); ++i)
        total += node_->children[static_cast<std::size_t>(i)].size();
    return total;
}

bool structurally_equal(const Expr& a, const Expr& b) noexcept
{
    if (a.kind() != b.kind())
        return false;
    if ((a.kind() == Expr::Kind::constant || a.kind() == Expr::Kind::power)
        && std::bit_cast<std::uint64_t>(a.value()) != std::bit_cast<std::uint64_t>(b.value()))
        return false;
    if (a.arity() >= 1 && !structurally_equal(a.lhs(), b.lhs()))
        return false;
    if (a.arity() == 2 && !structurally_equal(a.rhs(), b.rhs()))
        return false;
    return true;
}

//---------------------------------------------------------------------------//
// Rendering
//---------------------------------------------------------------------------//

namespace {

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    assert(ec == std::errc());
    return std::string(buf.data(), end);
}

// Binding strength used to decide where parentheses are required.
int precedence(const Expr& e)
{
    switch (e.kind()) {
    case Expr::Kind::add:
    case Expr::Kind::subtract:
        return 1;
    case Expr::Kind::multiply:
    case Expr::Kind::divide:
        return 2;
    case Expr::Kind::negate:
        return 3;
    case Expr::Kind::constant:
        return std::signbit(e.value()) ? 3 : 5;
    case Expr::Kind::power:
        return 4;
    default:
        return 5;
    }
}

std::string parenthesize(const std::string& s) { return "(" + s + ")"; }

std::string render_impl(const Expr& e);

std::string render_operand(const Expr& e, bool needs_parens)
{
    auto text = render_impl(e);
    return needs_parens ? parenthesize(text) : text;
}

std::string render_impl(const Expr& e)
{
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        if (std::signbit(e.value()))
            return "-" + format_number(-e.value());
        return format_number(e.value());
    case K::variable:
        return "x";
    case K::add:
    case K::subtract:
    case K::multiply:
    case K::divide: {
        int p = precedence(e);
        const char* op = e.kind() == K::add        ? " + "
                         : e.kind() == K::subtract ? " - "
                         : e.kind() == K::multiply ? "*"
                                                   : "/";
        return render_operand(e.lhs(), precedence(e.lhs()) < p) + op
               + render_operand(e.rhs(), precedence(e.rhs()) <= p);
    }
    case K::negate: {
        const Expr& operand = e.lhs();
        // A bare literal after '-' would re-parse as a negative constant.
        bool parens = precedence(operand) < 3
                      || (operand.is_constant() && !std::signbit(operand.value()));
        return "-" + render_operand(operand, parens);
    }
    case K::power: {
        auto exponent = std::signbit(e.value()) ? parenthesize("-" + format_number(-e.value()))
                                                : format_number(e.value());
        return render_operand(e.lhs(), precedence(e.lhs()) < 5) + "^" + exponent;
    }
    case K::sin:
        return "sin(" + render_impl(e.lhs()) + ")";
    case K::cos:
        return "cos(" + render_impl(e.lhs()) + ")";
    case K::exp:
        return "exp(" + render_impl(e.lhs()) + ")";
    case K::ln:
        return "ln(" + render_impl(e.lhs()) + ")";
    }
    return {};
}

}  // namespace

std::string render(const Expr& e) { return render_impl(e); }

//---------------------------------------------------------------------------//
// Evaluation
//---------------------------------------------------------------------------//

namespace {

bool is_integer(double v) { return std::nearbyint(v) == v; }

double evaluate_impl(const Expr& e, double x)
{
    using K = Expr::Kind;
    auto fail = [&](const char* what) -> double { throw DomainError(render(e), x, what); };

    double result = 0.0;
    switch (e.kind()) {
    case K::constant:
        return e.value();
    case K::variable:
        return x;
    case K::add:
        result = evaluate_impl(e.lhs(), x) + evaluate_impl(e.rhs(), x);
        break;
    case K::subtract:
        result = evaluate_impl(e.lhs(), x) - evaluate_impl(e.rhs(), x);
        break;
    case K::multiply:
        result = evaluate_impl(e.lhs(), x) * evaluate_impl(e.rhs(), x);
        break;
    case K::divide: {
        double num = evaluate_impl(e.lhs(), x);
        double den = evaluate_impl(e.rhs(), x);
        if (den == 0.0)
            return fail("division by zero");
        result = num / den;
        break;
    }
    case K::negate:
        return -evaluate_impl(e.lhs(), x);
    case K::power: {
        double base = evaluate_impl(e.lhs(), x);
        if (base < 0.0 && !is_integer(e.value()))
            return fail("negative base with non-integer exponent");
        if (base == 0.0 && e.value() < 0.0)
            return fail("zero base with negative exponent");
        result = std::pow(base, e.value());
        break;
    }
    case K::sin:
        return std::sin(evaluate_impl(e.lhs(), x));
    case K::cos:
        return std::cos(evaluate_impl(e.lhs(), x));
    case K::exp:
        result = std::exp(evaluate_impl(e.lhs(), x));
        break;
    case K::ln: {
        double arg = evaluate_impl(e.lhs(), x);
        if (!(arg > 0.0))
            return fail("logarithm of non-positive argument");
        return std::log(arg);
    }
    }
    if (!std::isfinite(result))
        return fail("non-finite result");
    return result;
}

}  // namespace

double evaluate(const Expr& e, double x) { return evaluate_impl(e, x); }

//---------------------------------------------------------------------------//
// Differentiation
//---------------------------------------------------------------------------//

Expr differentiate(const Expr& e)
{
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::constant:
        return Expr::constant(0.0);
    case K::variable:
        return Expr::constant(1.0);
    case K::add:
        return Expr::add(differentiate(e.lhs()), differentiate(e.rhs()));
    case K::subtract:
        return Expr::subtract(differentiate(e.lhs()), differentiate(e.rhs()));
    case K::multiply:
        return Expr::add(Expr::multiply(differentiate(e.lhs()), e.rhs()),
                         Expr::multiply(e.lhs(), differentiate(e.rhs())));
    case K::divide:
        return Expr::divide(Expr::subtract(Expr::multiply(differentiate(e.lhs()), e.rhs()),
                                           Expr::multiply(e.lhs(), differentiate(e.rhs()))),
                            Expr::power(e.rhs(), 2.0));
    case K::negate:
        return Expr::negate(differentiate(e.lhs()));
    case K::power:
        return Expr::multiply(Expr::multiply(Expr::constant(e.value()),
                                             Expr::power(e.lhs(), e.value() - 1.0)),
                              differentiate(e.lhs()));
    case K::sin:
        return Expr::multiply(Expr::cos(e.lhs()), differentiate(e.lhs()));
    case K::cos:
        return Expr::multiply(Expr::negate(Expr::sin(e.lhs())), differentiate(e.lhs()));
    case K::exp:
        return Expr::multiply(e, differentiate(e.lhs()));
    case K::ln:
        return Expr::divide(differentiate(e.lhs()), e.lhs());
    }
    return {};
}

//---------------------------------------------------------------------------//
// Simplification
//---------------------------------------------------------------------------//

namespace {

// Folds a node whose children are all constants, using the evaluator itself so
// the folded literal is exactly what evaluation would have produced.
std::optional<Expr> fold(const Expr& e)
{
    for (int i = 0; i < e.arity(); ++i) {
        const Expr& child = i == 0 ? e.lhs() : e.rhs();
        if (!child.is_constant())
            return std::nullopt;
    }
    try {
        return Expr::constant(evaluate(e, 0.0));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

Expr simplify_negate(Expr operand)
{
    if (operand.is_constant())
        return Expr::constant(-operand.value());
    if (operand.kind() == Expr::Kind::negate)
        return operand.lhs();
    return Expr::negate(std::move(operand));
}

Expr simplify_node(const Expr& e)
{
    using K = Expr::Kind;
    if (auto folded = fold(e))
        return *folded;

    switch (e.kind()) {
    case K::add: {
        const Expr& l = e.lhs();
        const Expr& r = e.rhs();
        if (l.is_constant(0.0))
            return r;
        if (r.is_constant(0.0))
            return l;
        if (r.kind() == K::negate)
            return simplify_node(Expr::subtract(l, r.lhs()));
        return e;
    }
    case K::subtract: {
        const Expr& l = e.lhs();
        const Expr& r = e.rhs();
        if (r.is_constant(0.0))
            return l;
        if (l.is_constant(0.0))
            return simplify_negate(r);
        if (r.kind() == K::negate)
            return simplify_node(Expr::add(l, r.lhs()));
        return e;
    }
    case K::multiply: {
        const Expr& l = e.lhs();
        const Expr& r = e.rhs();
        if (l.is_constant(0.0) || r.is_constant(0.0))
            return Expr::constant(0.0);
        if (l.is_constant(1.0))
            return r;
        if (r.is_constant(1.0))
            return l;
        if (l.is_constant(-1.0))
            return simplify_negate(r);
        if (r.is_constant(-1.0))
            return simplify_negate(l);
        if (l.kind() == K::negate)
            return simplify_negate(simplify_node(Expr::multiply(l.lhs(), r)));
        if (r.kind() == K::negate)
            return simplify_negate(simplify_node(Expr::multiply(l, r.lhs())));
        return e;
    }
    case K::divide: {
        const Expr& l = e.lhs();
        const Expr& r = e.rhs();
        if (r.is_constant(1.0))
            return l;
        if (r.is_constant(-1.0))
            return simplify_negate(l);
        if (l.is_constant(0.0))
            return Expr::constant(0.0);
        if (l.kind() == K::negate)
            return simplify_negate(simplify_node(Expr::divide(l.lhs(), r)));
        if (r.kind() == K::negate)
            return simplify_negate(simplify_node(Expr::divide(l, r.lhs())));
        return e;
    }
    case K::negate:
        return simplify_negate(e.lhs());
    case K::power:
        if (e.value() == 1.0)
            return e.lhs();
        if (e.value() == 0.0)
            return Expr::constant(1.0);
        return e;
    default:
        return e;
    }
}

Expr rebuild(const Expr& e, Expr l, Expr r)
{
    using K = Expr::Kind;
    switch (e.kind()) {
    case K::add: return Expr::add(std::move(l), std::move(r));
    case K::subtract: return Expr::subtract(std::move(l), std::move(r));
    case K::multiply: return Expr::multiply(std::move(l), std::move(r));
    case K::divide: return Expr::divide(std::move(l), std::move(r));
    case K::negate: return Expr::negate(std::move(l));
    case K::power: return Expr::power(std::move(l), e.value());
    case K::sin: return Expr::sin(std::move(l));
    case K::cos: return Expr::cos(std::move(l));
    case K::exp: return Expr::exp(std::move(l));
    case K::ln: return Expr::ln(std::move(l));
    default: return e;
    }
}

}  // namespace

Expr simplify(const Expr& e)
{
    if (e.arity() == 0)
        return e;
    Expr l = simplify(e.lhs());
    Expr r = e.arity() == 2 ? simplify(e.rhs()) : Expr();
    return simplify_node(rebuild(e, std::move(l), std::move(r)));
}

Expr derivative(const Expr& e, int order)
{
    if (order < 0)
        throw PreconditionError("derivative order must be non-negative");
    Expr result = e;
    for (int i = 0; i < order; ++i)
        result = simplify(differentiate(result));
    return result;
}

}  // namespace taylorlab
