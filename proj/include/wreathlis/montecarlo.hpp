#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreathlis/exact.hpp"

namespace wreathlis {

/// Which per-trial statistics to compute. ratio = L / (4√(nk)) and implies L.
struct StatisticSet {
    bool L = true;
    bool W = true;
    bool N = true;
    bool ratio = true;
};

struct TrialPlan {
    std::size_t n = 1;
    std::size_t k = 1;
    std::uint64_t trials = 1;
    StatisticSet statistics;
    std::uint64_t master_seed = 0;
    unsigned threads = 1;
};

/// One trial's outcome; statistics that were not requested hold -1.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::int32_t L = -1;
    std::int32_t W = -1;
    std::int32_t N = -1;
};

/**
 * Sample summary. variance is the unbiased estimator (0 for one sample),
 * se = √(variance / count). Quantiles use the lower rule
 * q_p = x_(⌈p·count⌉), so the lower median is always an attained value.
 */
struct SummaryStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
    double lower_median = 0.0;
    double se = 0.0;
    std::vector<std::pair<double, double>> quantiles;  ///< (p, q_p)
};

inline constexpr std::array<double, 5> kDefaultQuantiles{0.05, 0.25, 0.5, 0.75, 0.95};

SummaryStats summarize(std::span<const double> values, std::span<const double> probabilities = kDefaultQuantiles);

nlohmann::json to_json(const SummaryStats& s);

struct TrialRun {
    TrialPlan plan;
    std::vector<TrialRecord> records;  ///< ordered by trial index
    std::optional<SummaryStats> L;
    std::optional<SummaryStats> W;
    std::optional<SummaryStats> N;
    std::optional<SummaryStats> ratio;
};

/**
 * Runs plan.trials independent draws from S_k ≀ S_n. Trial t draws from
 * RandomSource(master_seed, t), so records and summaries are identical for
 * any thread count. Throws InvariantViolation if any record has W > L.
 */
TrialRun run_trials(const TrialPlan& plan);

/// {"trial","n","k","L","W","N"}; unrequested statistics are omitted.
nlohmann::json record_to_json(const TrialRecord& r, std::size_t n, std::size_t k);

/// Empirical histogram of one statistic over the records.
DistributionTable histogram(std::span<const TrialRecord> records, WreathStatistic stat);

/// Master seed used for grid cell (n, k) of a scan.
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n, std::size_t k);

struct ScanRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;  ///< cell seed actually used
    SummaryStats L;
    SummaryStats ratio;    ///< L / 4√(nk)
    SummaryStats W_ratio;  ///< W / 4√(nk)
    double mean_W = 0.0;
};

/// Summary of L/(4√(nk)) per grid cell, sorted by nk (ties by n).
std::vector<ScanRow> ratio_scan(std::span<const std::pair<std::size_t, std::size_t>> grid, std::uint64_t trials,
                                   std::uint64_t master_seed, unsigned threads = 1);

/// 2·exp(−u²/(4(h+u))).
double talagrand_bound(double h, double u);

struct TailReport {
    std::size_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool exact_moments = false;  ///< f, g exact (k within the enumeration cap)
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
    std::vector<double> u_grid;
    std::vector<double> empirical_tail;  ///< P̂(L_k >= h + u)
    std::vector<double> bound;
    std::vector<double> binomial_se;     ///< √(p̂(1-p̂)/trials)
    std::vector<double> mc_error;        ///< binomial_se, doubled when h is a plug-in estimate
    double median_tail = 0.0;            ///< P̂(L_k >= h), at most 1/4 in law
    double median_tail_se = 0.0;
    double sample_lower_median = 0.0;
};

/**
 * Draws L_k (LIS of a uniform permutation of size k) and compares its upper
 * tails above h(k) = f(k) + 2√g(k) with the Talagrand-form bound. f and g are
 * exact when k fits the enumeration cap, otherwise sample estimates.
 */
TailReport tail_check(std::size_t k, std::uint64_t trials, std::span<const double> u_grid, std::uint64_t master_seed,
                      const EnumerationCaps& caps = {}, unsigned threads = 1);

nlohmann::json to_json(const TailReport& r);

struct ConjectureRow {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    SummaryStats L_scaled;  ///< L_{n,2} / √n
    SummaryStats W_scaled;  ///< W / √n
};

/// Block size fixed at 2; one row per n in the given order.
std::vector<ConjectureRow> conjecture_scan(std::span<const std::size_t> n_grid, std::uint64_t trials,
                                           std::uint64_t master_seed, unsigned threads = 1);

/// Runs fn(begin, end) over [0, count) split into contiguous chunks, one per worker.
void parallel_for_chunks(std::uint64_t count, unsigned threads,
                         const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace wreathlis
