#include "taylorlab/simplex.hpp"

#include "taylorlab/errors.hpp"
#include "taylorlab/rng.hpp"
#include "taylorlab/taylor.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace taylorlab {

void SimplexSpec::validate() const
{
    if (dimension < 1 || dimension > max_dimension)
        throw PreconditionError("simplex dimension must lie in [1, 12], got "
                                + std::to_string(dimension));
    if (!std::isfinite(a) || !std::isfinite(x) || !(a < x))
        throw PreconditionError("simplex requires finite a < x");
}

void MonteCarloConfig::validate() const
{
    if (samples < 1 || samples > max_samples)
        throw PreconditionError("sample count must lie in [1, 1e9]");
}

double simplex_volume_exact(const SimplexSpec& s)
{
    s.validate();
    double v = 1.0;
    for (int k = 1; k <= s.dimension; ++k)
        v *= (s.x - s.a) / k;
    return v;
}

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20)
        throw PreconditionError("factorial argument out of range");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

namespace {

// Splits [0, total) into `workers` contiguous blocks and runs `body(begin, end, slot)`.
template <class Body>
void run_blocks(std::uint64_t total, unsigned workers, Body&& body)
{
    workers = std::max(1u, workers);
    if (workers == 1) {
        body(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    for (auto& t : threads)
        t.join();
}

}  // namespace

MonteCarloEstimate simplex_volume_montecarlo(const SimplexSpec& s, const MonteCarloConfig& cfg,
                                             unsigned workers)
{
    s.validate();
    cfg.validate();
    const CounterRng rng(cfg.seed);
    const auto n = static_cast<std::uint64_t>(s.dimension);
    const double width = s.x - s.a;

    std::vector<std::uint64_t> hits(std::max(1u, workers), 0);
    run_blocks(cfg.samples, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t base = i * n;
            double previous = s.a + width * rng.uniform(base);  // t_1
            bool ordered = true;
            for (std::uint64_t k = 1; k < n; ++k) {
                double t = s.a + width * rng.uniform(base + k);  // t_{k+1}
                if (t > previous) {
                    ordered = false;
                    break;
                }
                previous = t;
            }
            local += ordered ? 1 : 0;
        }
        hits[slot] = local;
    });

    MonteCarloEstimate result;
    result.samples = cfg.samples;
    result.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    const double cube = std::pow(width, s.dimension);
    const double p = static_cast<double>(result.hits) / static_cast<double>(cfg.samples);
    result.estimate = cube * p;
    result.std_error = cube * std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.samples));
    return result;
}

//---------------------------------------------------------------------------//
// Order-cell partition
//---------------------------------------------------------------------------//

std::size_t order_cell_key(std::span<const double> point)
{
    const std::size_t n = point.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int i, int j) { return point[static_cast<std::size_t>(i)] < point[static_cast<std::size_t>(j)]; });
    // Lehmer code of perm, which is its lexicographic rank.
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller_after = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            smaller_after += perm[j] < perm[i] ? 1 : 0;
        rank = rank * (n - i) + smaller_after;
    }
    return rank;
}

PartitionTally::PartitionTally(int n) : n_(n)
{
    if (n < 1 || n > 8)
        throw PreconditionError("partition tally supports 1 <= n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        cells_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    counts_.assign(cells_.size(), 0);
}

void PartitionTally::add(std::span<const double> point)
{
    if (point.size() != static_cast<std::size_t>(n_))
        throw PreconditionError("point dimension mismatch");
    ++total_;

    std::vector<double> sorted(point.begin(), point.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        ++discarded_;
        return;
    }

    std::size_t member_count = 0;
    std::size_t member = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        const auto& perm = cells_[c];
        bool inside = true;
        for (std::size_t k = 0; k + 1 < perm.size() && inside; ++k)
            inside = point[static_cast<std::size_t>(perm[k])]
                     <= point[static_cast<std::size_t>(perm[k + 1])];
        if (inside) {
            ++member_count;
            member = c;
        }
    }
    if (member_count != 1) {
        ++misclassified_;
        return;
    }
    if (order_cell_key(point) != member)
        ++key_mismatches_;
    ++counts_[member];
    ++classified_;
}

void PartitionTally::merge(const PartitionTally& other)
{
    if (other.n_ != n_)
        throw PreconditionError("cannot merge tallies of different dimension");
    for (std::size_t c = 0; c < counts_.size(); ++c)
        counts_[c] += other.counts_[c];
    total_ += other.total_;
    classified_ += other.classified_;
    discarded_ += other.discarded_;
    misclassified_ += other.misclassified_;
    key_mismatches_ += other.key_mismatches_;
}

double chi_square_quantile_999(int degrees_of_freedom)
{
    if (degrees_of_freedom < 1)
        throw PreconditionError("chi-square needs at least one degree of freedom");
    boost::math::chi_squared dist(static_cast<double>(degrees_of_freedom));
    return boost::math::quantile(dist, 0.999);
}

std::vector<CheckReport> PartitionReport::checks() const
{
    std::vector<CheckReport> out;
    auto tiling = CheckReport::from_gap(
        "tiling", static_cast<double>(total - classified - discarded), 0.0);
    tiling.pass = tiling.pass && all_classified_once;
    tiling.values = {{"total", static_cast<double>(total)},
                     {"classified", static_cast<double>(classified)},
                     {"discarded", static_cast<double>(discarded)}};
    out.push_back(std::move(tiling));
    out.push_back(CheckReport::from_gap("equal_cell_volumes", chi_square, chi_square_critical));
    out.push_back(CheckReport::from_gap("cell_frequency_sigma", max_cell_sigma, 5.0));
    return out;
}

PartitionReport ordering_partition_check(int n, const MonteCarloConfig& cfg, unsigned workers)
{
    if (n < 2 || n > 6)
        throw PreconditionError("ordering_partition_check requires 2 <= n <= 6");
    cfg.validate();
    const CounterRng rng(cfg.seed);
    const auto dim = static_cast<std::uint64_t>(n);

    workers = std::max(1u, workers);
    std::vector<PartitionTally> tallies(workers, PartitionTally(n));
    run_blocks(cfg.samples, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
        std::vector<double> point(dim);
        for (std::uint64_t i = begin; i < end; ++i) {
            for (std::uint64_t k = 0; k < dim; ++k)
                point[k] = rng.uniform(i * dim + k);
            tallies[slot].add(point);
        }
    });
    PartitionTally tally(n);
    for (const auto& t : tallies)
        tally.merge(t);

    PartitionReport r;
    r.dimension = n;
    r.total = tally.total();
    r.classified = tally.classified();
    r.discarded = tally.discarded();
    r.all_classified_once = tally.misclassified() == 0 && tally.key_mismatches() == 0
                            && r.classified + r.discarded == r.total;
    r.cell_counts = tally.cell_counts();

    const double cells = static_cast<double>(r.cell_counts.size());
    const double classified = static_cast<double>(r.classified);
    const double p = 1.0 / cells;
    const double expected = classified * p;
    const double sigma = std::sqrt(p * (1.0 - p) / classified);
    for (std::uint64_t count : r.cell_counts) {
        const double freq = static_cast<double>(count) / classified;
        r.frequencies.push_back(freq);
        r.chi_square += (count - expected) * (count - expected) / expected;
        r.max_cell_sigma = std::max(r.max_cell_sigma, std::abs(freq - p) / sigma);
    }
    r.degrees_of_freedom = static_cast<int>(r.cell_counts.size()) - 1;
    r.chi_square_critical = chi_square_quantile_999(r.degrees_of_freedom);
    return r;
}

//---------------------------------------------------------------------------//
// Sliced remainder
//---------------------------------------------------------------------------//

double sliced_simplex_volume(int order, double t, double a, double x)
{
    if (order < 0)
        throw PreconditionError("slice order must be non-negative");
    if (!(a <= t && t <= x))
        throw PreconditionError("sliced_simplex_volume requires a <= t <= x");
    double v = 1.0;
    for (int k = 1; k <= order; ++k)
        v *= (x - t) / k;
    return v;
}

double remainder_by_slicing(const Expr& f, double a, int order, double x,
                            const QuadratureConfig& cfg)
{
    if (order < 0 || order > max_expansion_order)
        throw PreconditionError("expansion order must lie in [0, 12]");
    const Expr integrand = derivative(f, order + 1);
    if (x == a || integrand.is_constant(0.0)) {
        cfg.validate();
        return 0.0;
    }
    if (x > a) {
        return integrate(
            [&](double t) {
                return evaluate(integrand, t) * sliced_simplex_volume(order, std::min(t, x), a, x);
            },
            a, x, cfg);
    }
    // Mirror: g(s) = f(−s) has g^(N+1)(s) = (−1)^(N+1) f^(N+1)(−s), base −a < −x.
    const double sign = (order + 1) % 2 == 0 ? 1.0 : -1.0;
    return integrate(
        [&](double s) {
            return sign * evaluate(integrand, -s)
                   * sliced_simplex_volume(order, std::min(s, -x), -a, -x);
        },
        -a, -x, cfg);
}

}  // namespace taylorlab
