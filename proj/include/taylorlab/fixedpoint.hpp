#pragma once

#include "taylorlab/expr.hpp"
#include "taylorlab/funcspace.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace taylorlab {

/// Iterates x_0, x_1, … of a fixed-point run with one residual per step taken.
template <class State>
struct IterationTrace
{
    std::vector<State> iterates;
    std::vector<double> residuals;
    bool converged = false;
    int iterations_used = 0;
};

using ScalarTrace = IterationTrace<double>;
using VectorTrace = IterationTrace<std::vector<double>>;

/// Thrown when an iteration cannot continue; carries the trace up to the failure.
class IterationFailure : public std::runtime_error
{
  public:
    IterationFailure(const std::string& what, ScalarTrace trace)
        : std::runtime_error(what), trace_(std::move(trace))
    {
    }

    const ScalarTrace& trace() const noexcept { return trace_; }

  private:
    ScalarTrace trace_;
};

/// x_{k+1} = g(x_k) until |x_{k+1} − x_k| ≤ tol or max_iter steps.
ScalarTrace iterate_scalar(const RealFunction& g, double x0, double tol, int max_iter);

/// Newton iteration x − f/f' with symbolic f'; converged when |f(x_k)| ≤ tol.
ScalarTrace newton(const Expr& f, double x0, double tol, int max_iter);

/// Square matrix, 2 ≤ d ≤ 16, row-major.
class SmallMatrix
{
  public:
    SmallMatrix(int dimension, std::vector<double> entries);

    int dimension() const noexcept { return d_; }
    double operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row * d_ + col)]; }
    std::vector<double> multiply(const std::vector<double>& v) const;

  private:
    int d_;
    std::vector<double> entries_;
};

struct PowerMethodResult
{
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;
    VectorTrace trace;
};

/**
 * v ← Mv/|Mv| until the sign-aligned change |v_{k+1} − s·v_k| ≤ tol, with
 * s = sign⟨v_{k+1}, v_k⟩. The eigenvalue is the Rayleigh quotient of the
 * final vector. Non-convergence is reported in the trace, not thrown.
 */
PowerMethodResult power_method(const SmallMatrix& m, std::vector<double> v0, double tol,
                               int max_iter);

/// g(x) = x + f(x), whose fixed points are exactly the roots of f.
RealFunction root_as_fixed_point(const Expr& f, Interval domain = Interval::wide());

}  // namespace taylorlab
