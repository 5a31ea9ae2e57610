#pragma once

#include "taylorlab/expr.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace taylorlab {

/// Closed interval [lo, hi] with lo < hi, both finite.
class Interval
{
  public:
    Interval(double lo, double hi);

    /// The interval spanned by two points in either order; `pad` widens a degenerate span.
    static Interval spanning(double p, double q, double pad = 1.0);

    /// A practically unbounded interval for maps iterated far from the origin.
    static Interval wide();

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double length() const noexcept { return hi_ - lo_; }
    bool contains(double t) const noexcept { return lo_ <= t && t <= hi_; }

  private:
    double lo_;
    double hi_;
};

enum class PanelRule {
    gauss_kronrod_7_15,
};

struct QuadratureConfig
{
    double abs_tolerance = 1e-10;
    double rel_tolerance = 0.0;
    int max_subdivision_depth = 40;
    PanelRule base_rule = PanelRule::gauss_kronrod_7_15;

    /// Throws PreconditionError if a field is out of range.
    void validate() const;
};

/**
 * A real-valued function on an interval.
 *
 * Three sources exist: an expression (symbolically differentiable), the
 * constant-one function, and an opaque closure. Closures may carry a
 * derivative thunk; an integral I_a g uses this to report g as its derivative.
 *
 * Values are immutable and cheap to copy; evaluation is thread-safe.
 */
class RealFunction
{
  public:
    enum class Source { expression, constant_one, closure };

    using Evaluator = std::function<double(double)>;
    using DerivativeThunk = std::function<RealFunction()>;

    static RealFunction from_expr(Expr e, Interval domain, std::string label = {});
    static RealFunction one(Interval domain);
    static RealFunction from_closure(Evaluator eval, Interval domain, std::string label,
                                     DerivativeThunk derivative = {});

    /// Throws DomainError outside the domain or where the source is undefined.
    double operator()(double t) const;

    Source source() const noexcept;
    const Interval& domain() const noexcept;
    const std::string& label() const noexcept;

    /// Expression backing, when the source is symbolic (including constant one).
    std::optional<Expr> expr() const;

    bool has_derivative() const noexcept;

    /// Throws UnsupportedDifferentiation when no symbolic route exists.
    RealFunction derivative() const;

    /// Same function restricted or extended to another domain.
    RealFunction with_domain(Interval domain) const;

  private:
    struct State;
    explicit RealFunction(std::shared_ptr<const State> state);
    std::shared_ptr<const State> state_;
};

RealFunction constant_one(Interval domain);

/// c·f, symbolic when f is.
RealFunction scale(double c, const RealFunction& f);

/// f + g on the intersection of their domains, symbolic when both are.
RealFunction add(const RealFunction& f, const RealFunction& g);

/// α·f + β·g.
RealFunction combine(double alpha, const RealFunction& f, double beta, const RealFunction& g);

/**
 * ∫_a^x f(t) dt by globally adaptive Gauss–Kronrod quadrature.
 *
 * The interval is oriented: for x < a the integral over [x, a] is computed and
 * negated. Throws ToleranceError if the error estimate cannot be brought under
 * max(abs_tolerance, rel_tolerance·|result|) within the depth limit.
 */
double integrate(const RealFunction& f, double a, double x, const QuadratureConfig& cfg = {});

/// Integration of a plain callable, used where no RealFunction wrapper is needed.
double integrate(const std::function<double(double)>& f, double a, double x,
                 const QuadratureConfig& cfg = {});

/// Estimate of sup |f| on [lo, hi] by dense sampling and local refinement.
double sup_abs(const RealFunction& f, const Interval& iv, const QuadratureConfig& cfg = {});

/// Sample count used by sup_abs (uniform, endpoints included).
inline constexpr int sup_abs_samples = 1025;

}  // namespace taylorlab
