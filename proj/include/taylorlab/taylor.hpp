#pragma once

#include "taylorlab/check_report.hpp"
#include "taylorlab/expr.hpp"
#include "taylorlab/funcspace.hpp"
#include "taylorlab/operators.hpp"

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace taylorlab {

/**
 * Taylor data for f about a, produced by repeated FTOC substitution.
 *
 * At order N the identity being tracked is
 *
 *   f = f(a)·1 + Df(a)·I_a 1 + … + D^N f(a)·I_a^N 1 + I_a^{N+1} D^{N+1} f
 *
 * `coefficients()[n]` holds the raw derivative value f^(n)(a); the 1/n!
 * lives in the basis function I_a^n 1 and is applied at evaluation time.
 * `derivative_exprs()` always runs one order ahead so the residual integrand
 * D^{N+1} f is available.
 */
class TaylorExpansion
{
  public:
    /// Order-0 state: f = f(a)·1 + I_a D f. Throws DomainError if f(a) is undefined.
    static TaylorExpansion start(Expr f, double base);

    double base() const noexcept { return base_; }
    int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    const Expr& source() const noexcept { return derivative_exprs_.front(); }
    const std::vector<Expr>& derivative_exprs() const noexcept { return derivative_exprs_; }

    /// D^{N+1} f, the integrand of the residual term.
    const Expr& residual_integrand() const { return derivative_exprs_.back(); }

    /// The residual operator I_a^{N+1} D^{N+1}.
    Operator residual_operator() const;

  private:
    friend TaylorExpansion ftoc_step(const TaylorExpansion&);
    TaylorExpansion(double base, std::vector<double> coefficients, std::vector<Expr> exprs);

    double base_;
    std::vector<double> coefficients_;
    std::vector<Expr> derivative_exprs_;
};

/// Replace D^{N+1} f in the residual by D^{N+1} f(a)·1 + I_a D^{N+2} f.
TaylorExpansion ftoc_step(const TaylorExpansion& partial);

/// Largest order accepted by expand.
inline constexpr int max_expansion_order = 12;

/// start(f, a) followed by N FTOC steps.
TaylorExpansion expand(const Expr& f, double base, int order);

/// P_N(x) = Σ f^(n)(a) (x−a)^n / n!, nested Horner form in (x−a).
double evaluate_polynomial(const TaylorExpansion& t, double x);

/// f(x) − P_N(x).
double remainder_direct(const TaylorExpansion& t, double x);

/// ∫_a^x (x−t)^N / N! · f^(N+1)(t) dt by a single quadrature.
double remainder_exact(const TaylorExpansion& t, double x, const QuadratureConfig& cfg = {});

/// Largest N+1 for which remainder_nested runs.
inline constexpr int max_nested_depth = 4;

/// Inner tolerance used by each level of the nested evaluation.
inline constexpr double nested_level_tolerance = 1e-8;

/**
 * I_a^{N+1} D^{N+1} f evaluated as N+1 literally nested quadratures, with the
 * innermost variable integrated first over [a, t_{k−1}]. No order exchange is
 * used, so agreement with remainder_exact is an independent witness.
 */
double remainder_nested(const TaylorExpansion& t, double x, const QuadratureConfig& cfg = {});

/// sup |f^(N+1)| over the span of a and x, times |x−a|^{N+1}/(N+1)!.
double remainder_bound(const TaylorExpansion& t, double x, const QuadratureConfig& cfg = {});

/// A two-variable integrand g(t_i, t_j) for the order-exchange check.
struct BivariateIntegrand
{
    std::string label;
    std::function<double(double, double)> eval;

    /// g(t_i, t_j) = p(t_i) · q(t_j).
    static BivariateIntegrand separable(const Expr& in_ti, const Expr& in_tj);

    /// A fixed set of named non-separable kernels.
    static std::vector<BivariateIntegrand> built_in();
};

/// ∫_a^u ∫_a^{t_j} g dt_i dt_j against ∫_a^u ∫_{t_i}^u g dt_j dt_i; passes at 10·abs_tolerance.
CheckReport verify_exchange(const BivariateIntegrand& g, double base, double upper,
                            const QuadratureConfig& cfg = {});

struct RemainderReport
{
    double x = 0.0;
    int order = 0;
    double direct = 0.0;
    double exact_integral = 0.0;
    std::optional<double> nested_integral;
    double bound = 0.0;
    double max_pairwise_gap = 0.0;
};

/// Largest pairwise difference among a set of values.
double max_pairwise_gap(std::initializer_list<std::optional<double>> values);

RemainderReport remainder_report(const Expr& f, double base, int order, double x,
                                 const QuadratureConfig& cfg = {});

}  // namespace taylorlab
