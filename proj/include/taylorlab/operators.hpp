#pragma once

#include "taylorlab/check_report.hpp"
#include "taylorlab/funcspace.hpp"

#include <memory>
#include <span>
#include <string>

namespace taylorlab {

/**
 * Linear operator on RealFunction values, built from D, I_a, evaluation at a,
 * identity and scaling, closed under sums, composition and powers.
 *
 * Operators compose right-to-left: compose(J, K) applied to f is J(K f).
 */
class Operator
{
  public:
    enum class Kind { differentiate, integrate_from, evaluate_at, identity, scale, sum, compose, power };

    static Operator differentiate();
    static Operator integrate_from(double base);
    static Operator evaluate_at(double base);
    static Operator identity();
    static Operator scale(double c);
    static Operator sum(Operator left, Operator right);
    static Operator compose(Operator outer, Operator inner);
    static Operator power(Operator inner, int n);

    Kind kind() const noexcept;

    /// Base point of integrate_from / evaluate_at, factor of scale.
    double parameter() const noexcept;

    /// Exponent of a power node.
    int exponent() const noexcept;

    /// Left summand, outer factor, or the repeated operator of a power.
    const Operator& first() const;
    /// Right summand or inner factor.
    const Operator& second() const;

    std::string to_string() const;

  private:
    struct Node;
    explicit Operator(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/**
 * Apply an operator to a function.
 *
 * D is symbolic: it succeeds on expression-backed functions and on results of
 * I_a, whose derivative is the integrand. compose(D, I_a) is rewritten to the
 * identity before application. Throws UnsupportedDifferentiation otherwise.
 */
RealFunction apply(const Operator& op, const RealFunction& f, const QuadratureConfig& cfg = {});

/// L f = f(a)·1 + I_a D f.
Operator ftoc_operator(double base);

/// Largest n accepted by iterated_integral_one.
inline constexpr int max_iterated_integral_depth = 6;

/// (I_a^n 1)(x) by n nested on-demand quadratures.
double iterated_integral_one(int n, double base, double x, const QuadratureConfig& cfg = {});

/// sup_{[a,x]} |g| · (x−a)^n / n!, the right side of |I_a^n g| ≤ sup|g| · I_a^n 1.
double monotone_bound(int n, const RealFunction& g, double base, double x,
                      const QuadratureConfig& cfg = {});

/// Max over probes of |op(αf+βg) − α·op f − β·op g|, passing below 5·abs_tolerance.
CheckReport check_linearity(const Operator& op, const RealFunction& f, const RealFunction& g,
                            double alpha, double beta, std::span<const double> probes,
                            const QuadratureConfig& cfg = {});

}  // namespace taylorlab
