#pragma once

#include "taylorlab/check_report.hpp"
#include "taylorlab/expr.hpp"
#include "taylorlab/funcspace.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace taylorlab {

/// The ordered simplex S_n = {a ≤ t_n ≤ … ≤ t_1 ≤ x}.
struct SimplexSpec
{
    int dimension = 1;
    double a = 0.0;
    double x = 1.0;

    static constexpr int max_dimension = 12;

    /// Throws PreconditionError unless 1 ≤ n ≤ 12 and a < x.
    void validate() const;
};

struct MonteCarloConfig
{
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;

    static constexpr std::uint64_t max_samples = 1'000'000'000;

    void validate() const;
};

struct MonteCarloEstimate
{
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// (x−a)^n / n!.
double simplex_volume_exact(const SimplexSpec& s);

/**
 * Hit-or-miss estimate of Vol(S_n): the fraction of uniform cube samples with
 * t_n ≤ … ≤ t_1, scaled by (x−a)^n. Sample i consumes counters [i·n, i·n+n)
 * of the seed's stream, so the result is identical for any worker count.
 */
MonteCarloEstimate simplex_volume_montecarlo(const SimplexSpec& s, const MonteCarloConfig& cfg,
                                             unsigned workers = 1);

/// n! as a count; n ≤ 20.
std::uint64_t factorial(int n);

/**
 * Classifies points of the n-cube into the n! order cells
 * {u_{π(0)} ≤ u_{π(1)} ≤ … ≤ u_{π(n−1)}}, π in lexicographic order.
 *
 * Points with a repeated coordinate lie on cell boundaries (a null set) and
 * are discarded and counted instead of being tie-broken.
 */
class PartitionTally
{
  public:
    explicit PartitionTally(int n);

    void add(std::span<const double> point);

    int dimension() const noexcept { return n_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t classified() const noexcept { return classified_; }
    std::uint64_t discarded() const noexcept { return discarded_; }
    /// Non-discarded points whose membership count was not exactly one.
    std::uint64_t misclassified() const noexcept { return misclassified_; }
    /// Points whose sorted-permutation key disagreed with the member cell.
    std::uint64_t key_mismatches() const noexcept { return key_mismatches_; }
    const std::vector<std::uint64_t>& cell_counts() const noexcept { return counts_; }

    void merge(const PartitionTally& other);

  private:
    int n_;
    std::vector<std::vector<int>> cells_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    std::uint64_t classified_ = 0;
    std::uint64_t discarded_ = 0;
    std::uint64_t misclassified_ = 0;
    std::uint64_t key_mismatches_ = 0;
};

/// Lexicographic rank of the permutation that sorts `point` ascending.
std::size_t order_cell_key(std::span<const double> point);

struct PartitionReport
{
    int dimension = 0;
    std::uint64_t total = 0;
    std::uint64_t classified = 0;
    std::uint64_t discarded = 0;
    bool all_classified_once = false;
    std::vector<std::uint64_t> cell_counts;
    std::vector<double> frequencies;
    double chi_square = 0.0;
    int degrees_of_freedom = 0;
    /// 99.9% quantile of chi-square with `degrees_of_freedom`.
    double chi_square_critical = 0.0;
    /// Largest |frequency − 1/n!| in binomial standard errors.
    double max_cell_sigma = 0.0;

    bool pass() const
    {
        return all_classified_once && chi_square <= chi_square_critical && max_cell_sigma <= 5.0;
    }

    std::vector<CheckReport> checks() const;
};

/// Tiling check of the n-cube by order cells, 2 ≤ n ≤ 6.
PartitionReport ordering_partition_check(int n, const MonteCarloConfig& cfg, unsigned workers = 1);

/// 99.9% chi-square quantile.
double chi_square_quantile_999(int degrees_of_freedom);

/// Vol {t ≤ t_N ≤ … ≤ t_1 ≤ x} = (x−t)^N / N!, for a ≤ t ≤ x.
double sliced_simplex_volume(int order, double t, double a, double x);

/**
 * ∫_a^x f^(N+1)(t) · Vol(S'_N(t)) dt. For x < a the mirror image s = −t is
 * used, which maps the expansion about a at x to one about −a at −x > −a.
 */
double remainder_by_slicing(const Expr& f, double a, int order, double x,
                            const QuadratureConfig& cfg = {});

}  // namespace taylorlab
