#include "wreathlis/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "wreathlis/decomp.hpp"
#include "wreathlis/error.hpp"
#include "wreathlis/lis.hpp"
#include "wreathlis/random.hpp"
#include "wreathlis/wreath.hpp"

namespace wreathlis {

SummaryStats summarize(std::span<const double> values, std::span<const double> probabilities) {
    SummaryStats s;
    s.count = values.size();
    if (values.empty()) return s;

    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.variance = ss / static_cast<double>(s.count - 1);
    }
    s.se = std::sqrt(s.variance / static_cast<double>(s.count));

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto lower_quantile = [&](double p) {
        const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(s.count)));
        return sorted[rank == 0 ? 0 : std::min(rank, sorted.size()) - 1];
    };
    s.lower_median = lower_quantile(0.5);
    for (double p : probabilities) s.quantiles.emplace_back(p, lower_quantile(p));
    return s;
}

nlohmann::json to_json(const SummaryStats& s) {
    nlohmann::json q = nlohmann::json::array();
    for (const auto& [p, v] : s.quantiles) q.push_back({{"p", p}, {"value", v}});
    return {{"count", s.count},       {"mean", s.mean}, {"variance", s.variance},
            {"median", s.lower_median}, {"se", s.se},     {"quantiles", q}};
}

void parallel_for_chunks(std::uint64_t count, unsigned threads,
                         const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1)));
    if (threads == 1) {
        fn(0, count);
        return;
    }
    const std::uint64_t chunk = (count + threads - 1) / threads;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = std::min(count, t * chunk);
        const std::uint64_t end = std::min(count, begin + chunk);
        pool.emplace_back(fn, begin, end);
    }
}

namespace {

std::vector<double> collect(std::span<const TrialRecord> records, std::int32_t TrialRecord::*field, double scale = 1.0) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(static_cast<double>(r.*field) * scale);
    return out;
}

}  // namespace

TrialRun run_trials(const TrialPlan& plan) {
    if (plan.n == 0 || plan.k == 0) throw InvalidArgument("run_trials: n and k must be positive");
    if (plan.trials == 0) throw InvalidArgument("run_trials: trials must be positive");

    const std::size_t n = plan.n, k = plan.k;
    const bool want_L = plan.statistics.L || plan.statistics.ratio;
    const bool want_blocks = plan.statistics.W || plan.statistics.N;

    TrialRun run;
    run.plan = plan;
    run.records.resize(plan.trials);

    parallel_for_chunks(plan.trials, plan.threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> inner(n * k), outer(n), word(n * k), tops;
        DecompScratch scratch;
        for (std::uint64_t t = begin; t < end; ++t) {
            RandomSource rng(plan.master_seed, t);
            sample_wreath_into(n, k, rng, inner, outer);
            TrialRecord& rec = run.records[t];
            rec.trial = t;
            if (want_L) {
                wreath_word_into(n, k, inner, outer, word);
                rec.L = static_cast<std::int32_t>(lis_length_unchecked(word, tops));
            }
            if (want_blocks) {
                const auto bs = block_statistics(n, k, inner, outer, scratch);
                if (plan.statistics.W) rec.W = static_cast<std::int32_t>(bs.W);
                if (plan.statistics.N) rec.N = static_cast<std::int32_t>(bs.N);
            }
        }
    });

    for (const auto& rec : run.records) {
        if (rec.L >= 0 && rec.W > rec.L) {
            throw InvariantViolation("trial " + std::to_string(rec.trial) + ": W = " + std::to_string(rec.W) +
                                     " exceeds L = " + std::to_string(rec.L));
        }
    }

    if (plan.statistics.L) run.L = summarize(collect(run.records, &TrialRecord::L));
    if (plan.statistics.W) run.W = summarize(collect(run.records, &TrialRecord::W));
    if (plan.statistics.N) run.N = summarize(collect(run.records, &TrialRecord::N));
    if (plan.statistics.ratio) {
        run.ratio = summarize(collect(run.records, &TrialRecord::L, 1.0 / (4.0 * std::sqrt(static_cast<double>(n * k)))));
    }
    return run;
}

nlohmann::json record_to_json(const TrialRecord& r, std::size_t n, std::size_t k) {
    nlohmann::json j = {{"trial", r.trial}, {"n", n}, {"k", k}};
    if (r.L >= 0) j["L"] = r.L;
    if (r.W >= 0) j["W"] = r.W;
    if (r.N >= 0) j["N"] = r.N;
    return j;
}

DistributionTable histogram(std::span<const TrialRecord> records, WreathStatistic stat) {
    std::map<std::int64_t, std::uint64_t> counts;
    for (const auto& r : records) {
        const std::int32_t v = stat == WreathStatistic::L ? r.L : stat == WreathStatistic::W ? r.W : r.N;
        if (v >= 0) ++counts[v];
    }
    return DistributionTable::from_counts(counts);
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t n, std::size_t k) {
    return derive_seed(derive_seed(master_seed, n), k);
}

std::vector<ScanRow> ratio_scan(std::span<const std::pair<std::size_t, std::size_t>> grid, std::uint64_t trials,
                                   std::uint64_t master_seed, unsigned threads) {
    std::vector<ScanRow> rows;
    for (const auto& [n, k] : grid) {
        TrialPlan plan;
        plan.n = n;
        plan.k = k;
        plan.trials = trials;
        plan.master_seed = cell_seed(master_seed, n, k);
        plan.threads = threads;
        const auto run = run_trials(plan);

        ScanRow row;
        row.n = n;
        row.k = k;
        row.trials = trials;
        row.seed = plan.master_seed;
        row.L = *run.L;
        row.ratio = *run.ratio;
        const double scale = 1.0 / (4.0 * std::sqrt(static_cast<double>(n * k)));
        row.W_ratio = summarize(collect(run.records, &TrialRecord::W, scale));
        row.mean_W = run.W->mean;
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        return std::pair(a.n * a.k, a.n) < std::pair(b.n * b.k, b.n);
    });
    return rows;
}

double talagrand_bound(double h, double u) { return 2.0 * std::exp(-(u * u) / (4.0 * (h + u))); }

TailReport tail_check(std::size_t k, std::uint64_t trials, std::span<const double> u_grid, std::uint64_t master_seed,
                      const EnumerationCaps& caps, unsigned threads) {
    if (k < 2) throw InvalidArgument("tail_check: k must be at least 2");
    if (trials == 0) throw InvalidArgument("tail_check: trials must be positive");
    for (double u : u_grid) {
        if (!(u >= 0.0)) throw InvalidArgument("tail_check: u grid values must be nonnegative");
    }

    TailReport r;
    r.k = k;
    r.trials = trials;
    r.seed = master_seed;
    r.u_grid.assign(u_grid.begin(), u_grid.end());

    std::vector<std::int32_t> samples(trials);
    parallel_for_chunks(trials, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> perm(k), tops;
        for (std::uint64_t t = begin; t < end; ++t) {
            RandomSource rng(master_seed, t);
            std::iota(perm.begin(), perm.end(), Symbol{1});
            shuffle(perm, rng);
            samples[t] = static_cast<std::int32_t>(lis_length_unchecked(perm, tops));
        }
    });

    std::vector<double> values(samples.begin(), samples.end());
    const auto summary = summarize(values);
    r.sample_lower_median = summary.lower_median;
    if (k <= caps.max_sym_degree) {
        const auto exact = perm_stats(k, caps);
        r.exact_moments = true;
        r.f = static_cast<double>(exact.f);
        r.g = static_cast<double>(exact.g);
    } else {
        r.f = summary.mean;
        r.g = summary.variance;
    }
    r.h = r.f + 2.0 * std::sqrt(r.g);

    const auto total = static_cast<double>(trials);
    auto tail_at = [&](double threshold) {
        std::uint64_t hits = 0;
        for (auto s : samples) hits += static_cast<double>(s) >= threshold ? 1 : 0;
        const double p = static_cast<double>(hits) / total;
        return std::pair(p, std::sqrt(p * (1.0 - p) / total));
    };

    std::tie(r.median_tail, r.median_tail_se) = tail_at(r.h);
    for (double u : r.u_grid) {
        const auto [p, se] = tail_at(r.h + u);
        r.empirical_tail.push_back(p);
        r.binomial_se.push_back(se);
        r.mc_error.push_back(r.exact_moments ? se : 2.0 * se);
        r.bound.push_back(talagrand_bound(r.h, u));
    }
    return r;
}

nlohmann::json to_json(const TailReport& r) {
    return {{"k", r.k},
            {"trials", r.trials},
            {"seed", r.seed},
            {"exact_moments", r.exact_moments},
            {"f", r.f},
            {"g", r.g},
            {"h", r.h},
            {"sample_median", r.sample_lower_median},
            {"median_tail", r.median_tail},
            {"median_tail_se", r.median_tail_se},
            {"u_grid", r.u_grid},
            {"empirical_tail", r.empirical_tail},
            {"bound", r.bound},
            {"binomial_se", r.binomial_se},
            {"mc_error", r.mc_error}};
}

std::vector<ConjectureRow> conjecture_scan(std::span<const std::size_t> n_grid, std::uint64_t trials,
                                           std::uint64_t master_seed, unsigned threads) {
    std::vector<ConjectureRow> rows;
    for (std::size_t n : n_grid) {
        TrialPlan plan;
        plan.n = n;
        plan.k = 2;
        plan.trials = trials;
        plan.master_seed = cell_seed(master_seed, n, 2);
        plan.threads = threads;
        plan.statistics = {.L = true, .W = true, .N = false, .ratio = false};
        const auto run = run_trials(plan);

        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        ConjectureRow row;
        row.n = n;
        row.trials = trials;
        row.seed = plan.master_seed;
        row.L_scaled = summarize(collect(run.records, &TrialRecord::L, scale));
        row.W_scaled = summarize(collect(run.records, &TrialRecord::W, scale));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wreathlis
