#include "taylorlab/errors.hpp"
#include "taylorlab/funcspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace taylorlab {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]. Nodes are
// listed from the outside in; odd indices (and the centre) are the Gauss nodes.
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

// Hard cap on live panels, independent of depth, so pathological integrands fail fast.
constexpr std::size_t max_panels = 8192;

struct Panel
{
    double lo;
    double hi;
    double integral;
    double error;
    int depth;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(const F& f, double lo, double hi, int depth)
{
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f_centre = f(centre);
    double kronrod = kronrod_weights[7] * f_centre;
    double gauss = gauss_weights[3] * f_centre;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1)
            gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return Panel{lo, hi, kronrod, std::abs(kronrod - gauss), depth};
}

template <class F>
double integrate_oriented(const F& f, double lo, double hi, const QuadratureConfig& cfg)
{
    cfg.validate();
    auto tolerance = [&](double integral) {
        return std::max(cfg.abs_tolerance, cfg.rel_tolerance * std::abs(integral));
    };

    std::priority_queue<Panel> queue;
    Panel first = gauss_kronrod_15(f, lo, hi, 0);
    double integral = first.integral;
    double error = first.error;
    queue.push(first);

    while (error > tolerance(integral)) {
        Panel worst = queue.top();
        if (worst.depth >= cfg.max_subdivision_depth || queue.size() >= max_panels)
            throw ToleranceError(integral, error, tolerance(integral));
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = gauss_kronrod_15(f, worst.lo, mid, worst.depth + 1);
        Panel right = gauss_kronrod_15(f, mid, worst.hi, worst.depth + 1);
        integral += left.integral + right.integral - worst.integral;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    if (queue.size() == 1)
        return queue.top().integral;

    // Re-sum in domain order so the result does not depend on update history.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return p.lo < q.lo; });
    double sum = 0.0;
    for (const Panel& p : panels)
        sum += p.integral;
    return sum;
}

template <class F>
double integrate_signed(const F& f, double a, double x, const QuadratureConfig& cfg)
{
    if (a == x) {
        cfg.validate();
        return 0.0;
    }
    if (x < a)
        return -integrate_oriented(f, x, a, cfg);
    return integrate_oriented(f, a, x, cfg);
}

}  // namespace

double integrate(const RealFunction& f, double a, double x, const QuadratureConfig& cfg)
{
    const Interval& dom = f.domain();
    if (!dom.contains(a) || !dom.contains(x))
        throw DomainError(f.label(), dom.contains(a) ? x : a,
                          "integration limit outside function domain");
    return integrate_signed(f, a, x, cfg);
}

double integrate(const std::function<double(double)>& f, double a, double x,
                 const QuadratureConfig& cfg)
{
    return integrate_signed(f, a, x, cfg);
}

}  // namespace taylorlab
