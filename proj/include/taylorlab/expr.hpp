#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace taylorlab {

/**
 * Immutable expression tree over a single variable `x`.
 *
 * The grammar is closed under differentiation: powers only take literal
 * constant exponents, and the only transcendental nodes are sin, cos, exp
 * and ln. Nodes are shared between trees, so copying an Expr is cheap and
 * derivative chains reuse subtrees.
 */
class Expr
{
  public:
    enum class Kind {
        constant,
        variable,
        add,
        subtract,
        multiply,
        divide,
        negate,
        power,
        sin,
        cos,
        exp,
        ln
    };

    /// The constant 0.
    Expr();

    static Expr constant(double value);
    static Expr variable();

    static Expr add(Expr lhs, Expr rhs);
    static Expr subtract(Expr lhs, Expr rhs);
    static Expr multiply(Expr lhs, Expr rhs);
    static Expr divide(Expr lhs, Expr rhs);
    static Expr negate(Expr operand);
    static Expr power(Expr base, double exponent);
    static Expr sin(Expr operand);
    static Expr cos(Expr operand);
    static Expr exp(Expr operand);
    static Expr ln(Expr operand);

    Kind kind() const noexcept;

    /// Literal value of a constant node, or the exponent of a power node.
    double value() const noexcept;

    /// Number of children: 0 for leaves, 1 for unary nodes and power, 2 for binaries.
    int arity() const noexcept;

    /// First operand (unary/power operand or binary lhs).
    const Expr& lhs() const;
    const Expr& rhs() const;

    bool is_constant() const noexcept { return kind() == Kind::constant; }
    bool is_constant(double v) const noexcept { return is_constant() && value() == v; }

    /// Total node count, shared subtrees counted once per reference.
    std::size_t size() const noexcept;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Same node kinds, same constants (bitwise), same shape.
bool structurally_equal(const Expr& a, const Expr& b) noexcept;

/// Parse infix text. Throws ParseError.
Expr parse(std::string_view text);

/// Text that parses back to a structurally identical tree.
std::string render(const Expr& e);

/// IEEE double evaluation at `x`. Throws DomainError naming the failing subexpression.
double evaluate(const Expr& e, double x);

/// Exact symbolic derivative with respect to x (unsimplified).
Expr differentiate(const Expr& e);

/**
 * Value-preserving local rewrites: dropping exact zero/one terms, folding
 * constant subtrees, and sign moves that are exact in IEEE arithmetic. The
 * result evaluates bit-identically wherever the input is defined.
 */
Expr simplify(const Expr& e);

/// simplify(differentiate(e)) applied `order` times.
Expr derivative(const Expr& e, int order = 1);

}  // namespace taylorlab
