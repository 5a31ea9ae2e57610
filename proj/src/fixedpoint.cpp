#include "taylorlab/fixedpoint.hpp"

#include "taylorlab/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace taylorlab {

ScalarTrace iterate_scalar(const RealFunction& g, double x0, double tol, int max_iter)
{
    if (max_iter < 1)
        throw PreconditionError("max_iter must be >= 1");
    ScalarTrace trace;
    trace.iterates.push_back(x0);
    double x = x0;
    for (int k = 0; k < max_iter; ++k) {
        double next = 0.0;
        try {
            next = g(x);
        } catch (const DomainError& e) {
            throw IterationFailure(std::string("iteration left the domain: ") + e.what(),
                                   std::move(trace));
        }
        double residual = std::abs(next - x);
        trace.iterates.push_back(next);
        trace.residuals.push_back(residual);
        trace.iterations_used = k + 1;
        x = next;
        if (residual <= tol) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

ScalarTrace newton(const Expr& f, double x0, double tol, int max_iter)
{
    if (max_iter < 1)
        throw PreconditionError("max_iter must be >= 1");
    const Expr df = derivative(f);
    ScalarTrace trace;
    trace.iterates.push_back(x0);
    double x = x0;
    for (int k = 0; k < max_iter; ++k) {
        double next = 0.0;
        double residual = 0.0;
        try {
            double slope = evaluate(df, x);
            if (slope == 0.0) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "zero derivative at iterate x_" << k << " = " << x;
                throw IterationFailure(msg.str(), std::move(trace));
            }
            next = x - evaluate(f, x) / slope;
            residual = std::abs(evaluate(f, next));
        } catch (const DomainError& e) {
            throw IterationFailure(std::string("Newton iterate left the domain: ") + e.what(),
                                   std::move(trace));
        }
        trace.iterates.push_back(next);
        trace.residuals.push_back(residual);
        trace.iterations_used = k + 1;
        x = next;
        if (residual <= tol) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

SmallMatrix::SmallMatrix(int dimension, std::vector<double> entries)
    : d_(dimension), entries_(std::move(entries))
{
    if (d_ < 2 || d_ > 16)
        throw PreconditionError("matrix dimension must lie in [2, 16]");
    if (entries_.size() != static_cast<std::size_t>(d_ * d_))
        throw PreconditionError("matrix needs d*d entries");
    for (double v : entries_)
        if (!std::isfinite(v))
            throw PreconditionError("matrix entries must be finite");
}

std::vector<double> SmallMatrix::multiply(const std::vector<double>& v) const
{
    std::vector<double> out(static_cast<std::size_t>(d_), 0.0);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

namespace {

double norm2(const std::vector<double>& v)
{
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

PowerMethodResult power_method(const SmallMatrix& m, std::vector<double> v0, double tol,
                               int max_iter)
{
    if (v0.size() != static_cast<std::size_t>(m.dimension()))
        throw PreconditionError("start vector dimension mismatch");
    if (max_iter < 1)
        throw PreconditionError("max_iter must be >= 1");
    double len = norm2(v0);
    if (!(len > 0.0))
        throw PreconditionError("start vector must be nonzero");
    for (double& c : v0)
        c /= len;

    PowerMethodResult result;
    VectorTrace& trace = result.trace;
    trace.iterates.push_back(v0);
    std::vector<double> v = std::move(v0);
    for (int k = 0; k < max_iter; ++k) {
        std::vector<double> image = m.multiply(v);
        double image_len = norm2(image);
        if (!(image_len > 0.0))
            throw std::runtime_error("power method: M v vanished at iteration "
                                     + std::to_string(k));
        for (double& c : image)
            c /= image_len;
        const double s = dot(image, v) < 0.0 ? -1.0 : 1.0;
        double change = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            change += (image[i] - s * v[i]) * (image[i] - s * v[i]);
        change = std::sqrt(change);

        trace.iterates.push_back(image);
        trace.residuals.push_back(change);
        trace.iterations_used = k + 1;
        v = std::move(image);
        if (change <= tol) {
            trace.converged = true;
            break;
        }
    }
    result.eigenvalue = dot(v, m.multiply(v)) / dot(v, v);
    result.eigenvector = std::move(v);
    return result;
}

RealFunction root_as_fixed_point(const Expr& f, Interval domain)
{
    return RealFunction::from_expr(Expr::add(Expr::variable(), f), domain,
                                   "x + (" + render(f) + ")");
}

}  // namespace taylorlab
