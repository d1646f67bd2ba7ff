#include <doctest.h>

#include <cmath>

#include "wreathlis/error.hpp"
#include "wreathlis/exact.hpp"
#include "wreathlis/montecarlo.hpp"

using namespace wreathlis;

namespace {

TrialPlan plan_for(std::size_t n, std::size_t k, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
    TrialPlan p;
    p.n = n;
    p.k = k;
    p.trials = trials;
    p.master_seed = seed;
    p.threads = threads;
    return p;
}

bool same_records(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].trial != b[i].trial || a[i].L != b[i].L || a[i].W != b[i].W || a[i].N != b[i].N) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("summarize") {
    const std::vector<double> v{4, 1, 3, 2};
    const auto s = summarize(v);
    CHECK(s.count == 4);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.variance == doctest::Approx(5.0 / 3.0));
    CHECK(s.lower_median == 2);
    CHECK(s.se == doctest::Approx(std::sqrt(5.0 / 12.0)));
    REQUIRE(s.quantiles.size() == kDefaultQuantiles.size());
    CHECK(s.quantiles.front().second == 1);  // p = 0.05
    CHECK(s.quantiles.back().second == 4);   // p = 0.95

    const std::vector<double> odd{5, 9, 7};
    CHECK(summarize(odd).lower_median == 7);
    const std::vector<double> one{3};
    CHECK(summarize(one).variance == 0);
    CHECK(summarize(one).lower_median == 3);
}

TEST_CASE("trivial group") {
    const auto run = run_trials(plan_for(1, 1, 100, 5));
    for (const auto& r : run.records) CHECK(r.L == 1);
    CHECK(run.L->variance == 0);
    CHECK(run.ratio->mean == doctest::Approx(0.25));
}

TEST_CASE("plan validation") {
    CHECK_THROWS_AS(run_trials(plan_for(0, 1, 10, 1)), InvalidArgument);
    CHECK_THROWS_AS(run_trials(plan_for(1, 1, 0, 1)), InvalidArgument);
}

TEST_CASE("records are independent of thread count") {
    const auto one = run_trials(plan_for(30, 7, 3000, 99, 1));
    const auto four = run_trials(plan_for(30, 7, 3000, 99, 4));
    const auto seven = run_trials(plan_for(30, 7, 3000, 99, 7));
    CHECK(same_records(one.records, four.records));
    CHECK(same_records(one.records, seven.records));
    CHECK(one.L->mean == four.L->mean);
    CHECK(one.W->variance == seven.W->variance);
    for (std::size_t t = 0; t < one.records.size(); ++t) CHECK(one.records[t].trial == t);
}

TEST_CASE("W never exceeds L") {
    const auto run = run_trials(plan_for(40, 5, 5000, 3));
    for (const auto& r : run.records) CHECK(r.W <= r.L);
}

TEST_CASE("statistic selection") {
    auto plan = plan_for(10, 3, 50, 1);
    plan.statistics = {.L = false, .W = true, .N = false, .ratio = false};
    const auto run = run_trials(plan);
    CHECK_FALSE(run.L.has_value());
    CHECK(run.W.has_value());
    for (const auto& r : run.records) {
        CHECK(r.L == -1);
        CHECK(r.N == -1);
    }
    CHECK(record_to_json(run.records[0], 10, 3).contains("W"));
    CHECK_FALSE(record_to_json(run.records[0], 10, 3).contains("L"));
}

TEST_CASE("estimators agree with exact moments") {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 3}}) {
        const auto run = run_trials(plan_for(n, k, 1'000'000, 2024));
        for (auto stat : {WreathStatistic::L, WreathStatistic::W, WreathStatistic::N}) {
            const auto exact = enumerate_wreath(n, k, stat);
            const auto& s = stat == WreathStatistic::L ? *run.L : stat == WreathStatistic::W ? *run.W : *run.N;
            CHECK(std::abs(s.mean - static_cast<double>(exact.mean)) <= 4 * s.se);
            // Sample variance has standard error about sqrt((mu4 - sigma^4) / count); its
            // value is within 2% here at these trial counts.
            CHECK(s.variance == doctest::Approx(static_cast<double>(exact.variance)).epsilon(0.02));
        }
        if (n == 2) {
            CHECK(std::abs(run.L->mean - 19.0 / 8.0) <= 3 * run.L->se);
            CHECK(std::abs(run.W->mean - 9.0 / 4.0) <= 3 * run.W->se);
        }
    }
}

TEST_CASE("histogram counts every record") {
    const auto run = run_trials(plan_for(5, 5, 2000, 8));
    const auto h = histogram(run.records, WreathStatistic::L);
    CHECK(h.total == 2000);
    CHECK(static_cast<double>(h.mean) == doctest::Approx(run.L->mean));
}

TEST_CASE("ratio_scan") {
    const std::vector<std::pair<std::size_t, std::size_t>> grid{{64, 64}, {16, 16}, {256, 256}, {8, 2}};
    const auto rows = ratio_scan(grid, 50, 7);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].n * rows[i - 1].k <= rows[i].n * rows[i].k);
    CHECK(rows[0].n == 8);
    for (const auto& r : rows) CHECK(r.W_ratio.mean <= r.ratio.mean);
    CHECK(rows[1].ratio.mean < rows[2].ratio.mean);
    CHECK(rows[2].ratio.mean < rows[3].ratio.mean);
    CHECK(rows[1].seed != rows[2].seed);

    const auto again = ratio_scan(grid, 50, 7, 3);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].ratio.mean == rows[i].ratio.mean);
}

TEST_CASE("talagrand bound") {
    CHECK(talagrand_bound(10.0, 0.0) == 2.0);
    CHECK(talagrand_bound(3.0, 5.0) == doctest::Approx(2.0 * std::exp(-25.0 / 32.0)));
    CHECK(talagrand_bound(1.0, 1e6) < 1e-100);
}

TEST_CASE("tail_check") {
    const std::vector<double> u{0, 1, 2, 4, 8, 16};
    SUBCASE("small k uses exact moments") {
        const auto r = tail_check(5, 50000, u, 1);
        CHECK(r.exact_moments);
        CHECK(r.f == doctest::Approx(static_cast<double>(perm_stats(5).f)));
        CHECK(r.h == doctest::Approx(perm_stats(5).h));
        CHECK(r.median_tail <= 0.25 + 3 * r.median_tail_se);
        CHECK(r.bound[0] == 2.0);
        CHECK(r.sample_lower_median <= r.h);
    }
    SUBCASE("large k uses plug-in moments") {
        for (std::size_t k : {50U, 500U}) {
            const auto r = tail_check(k, 5000, u, 2);
            CHECK_FALSE(r.exact_moments);
            CHECK(r.median_tail <= 0.25 + 3 * r.median_tail_se);
            for (std::size_t i = 0; i < u.size(); ++i) CHECK(r.mc_error[i] == doctest::Approx(2 * r.binomial_se[i]));
        }
    }
    SUBCASE("domination at k = 100") {
        const auto r = tail_check(100, 20000, u, 3, {}, 2);
        for (std::size_t i = 0; i < u.size(); ++i) {
            CHECK(r.empirical_tail[i] >= 0.0);
            CHECK(r.empirical_tail[i] <= 1.0);
            CHECK(r.bound[i] > 0.0);
            CHECK(r.bound[i] <= 2.0);
            CHECK(r.empirical_tail[i] <= r.bound[i] + 3 * r.mc_error[i]);
        }
        for (std::size_t i = 1; i < u.size(); ++i) CHECK(r.empirical_tail[i] <= r.empirical_tail[i - 1]);
    }
    CHECK_THROWS_AS(tail_check(1, 10, u, 1), InvalidArgument);
    const std::vector<double> bad{-1};
    CHECK_THROWS_AS(tail_check(5, 10, bad, 1), InvalidArgument);
}

TEST_CASE("tail_check is thread independent") {
    const std::vector<double> u{0, 3};
    const auto a = tail_check(30, 4000, u, 11, {}, 1);
    const auto b = tail_check(30, 4000, u, 11, {}, 3);
    CHECK(a.empirical_tail == b.empirical_tail);
    CHECK(a.h == b.h);
}

TEST_CASE("conjecture_scan") {
    const std::vector<std::size_t> grid{1, 100};
    const auto rows = conjecture_scan(grid, 20000, 5);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(rows[0].L_scaled.mean - 1.5) <= 4 * rows[0].L_scaled.se);
    CHECK(rows[0].L_scaled.quantiles.front().second >= 1.0);
    CHECK(rows[0].L_scaled.quantiles.back().second <= 2.0);
    for (const auto& r : rows) CHECK(r.W_scaled.mean <= r.L_scaled.mean);
}

}
