// Recursive-descent parser for the infix expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' exponent)?
//   base   := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func   := 'sin' | 'cos' | 'exp' | 'ln'
//
// An exponent is a literal: `2`, `-1`, or `(-1)`. A '-' applied directly to a
// bare literal yields a negative constant rather than a negate node.

#include "taylorlab/errors.hpp"
#include "taylorlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace taylorlab {
namespace {

class Parser
{
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all()
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "empty input", "expression");
        Expr e = parse_expr();
        skip_space();
        if (!at_end())
            throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'",
                             "operator or end of input");
        return e;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw ParseError(pos_, at_end() ? "unexpected end of input" : "unexpected token",
                             what);
    }

    Expr parse_expr()
    {
        Expr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = Expr::add(std::move(lhs), parse_term());
            else if (accept('-'))
                lhs = Expr::subtract(std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    Expr parse_term()
    {
        Expr lhs = parse_unary();
        for (;;) {
            if (accept('*'))
                lhs = Expr::multiply(std::move(lhs), parse_unary());
            else if (accept('/'))
                lhs = Expr::divide(std::move(lhs), parse_unary());
            else
                return lhs;
        }
    }

    Expr parse_unary()
    {
        if (!accept('-'))
            return parse_factor();
        skip_space();
        if (starts_number()) {
            std::size_t save = pos_;
            double v = parse_number();
            skip_space();
            if (peek() != '^')
                return Expr::constant(-v);
            pos_ = save;
        }
        return Expr::negate(parse_unary());
    }

    Expr parse_factor()
    {
        Expr base = parse_base();
        if (!accept('^'))
            return base;
        return Expr::power(std::move(base), parse_exponent());
    }

    double parse_exponent()
    {
        skip_space();
        std::size_t start = pos_;
        bool parenthesized = accept('(');
        bool negative = accept('-');
        skip_space();
        if (!starts_number()) {
            bool symbolic = peek() == 'x' || std::isalpha(static_cast<unsigned char>(peek()))
                            || peek() == '(';
            throw ParseError(symbolic ? start : pos_,
                             symbolic ? "exponent must be a constant" : "unexpected token",
                             "numeric exponent");
        }
        double v = parse_number();
        if (parenthesized)
            expect(')', "')'");
        return negative ? -v : v;
    }

    Expr parse_base()
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "unexpected end of input", "operand");
        if (starts_number())
            return Expr::constant(parse_number());
        if (accept('(')) {
            Expr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x")
                return Expr::variable();
            Expr (*make)(Expr) = nullptr;
            if (name == "sin")
                make = &Expr::sin;
            else if (name == "cos")
                make = &Expr::cos;
            else if (name == "exp")
                make = &Expr::exp;
            else if (name == "ln")
                make = &Expr::ln;
            else
                throw ParseError(start, "unknown identifier '" + std::string(name) + "'",
                                 "x, sin, cos, exp or ln");
            expect('(', "'(' after function name");
            Expr arg = parse_expr();
            expect(')', "')'");
            return make(std::move(arg));
        }
        throw ParseError(pos_, "unexpected '" + std::string(1, peek()) + "'", "operand");
    }

    bool starts_number() const
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return true;
        return c == '.' && pos_ + 1 < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    // Decimal literal with optional fraction and exponent; no sign.
    double parse_number()
    {
        std::size_t start = pos_;
        auto digits = [&] {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        };
        digits();
        if (peek() == '.') {
            ++pos_;
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_++;
            if (peek() == '+' || peek() == '-')
                ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = mark;  // not an exponent; leave 'e' for the caller
            } else {
                digits();
            }
        }
        double v = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw ParseError(start, "invalid number literal", "finite decimal number");
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace taylorlab
