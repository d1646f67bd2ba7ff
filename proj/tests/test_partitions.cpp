#include <doctest.h>

#include <map>
#include <set>

#include "wreathlis/error.hpp"
#include "wreathlis/partitions.hpp"

using namespace wreathlis;

namespace {

std::vector<Permutation> brute_centralizer(const Permutation& s) {
    std::vector<Permutation> out;
    for (const auto& t : all_permutations(s.degree())) {
        if (compose(s, t) == compose(t, s)) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("canonical cycles and cycle types") {
    // 1→3→5→1, 2↔4, 6 fixed
    const Permutation p{3, 4, 5, 2, 1, 6};
    const auto cycles = canonical_cycles(p);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0] == std::vector<Symbol>{6});
    CHECK(cycles[1] == std::vector<Symbol>{2, 4});
    CHECK(cycles[2] == std::vector<Symbol>{1, 3, 5});
    CHECK(cycle_type(p).parts() == std::vector<std::size_t>{3, 2, 1});
    CHECK(cycle_type(Permutation::identity(4)).parts() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(cycle_type(p).size() == 6);
    CHECK(to_string(cycle_type(p)) == "[3,2,1]");
    CHECK_THROWS_AS(CycleType({2, 0}), InvalidArgument);
    CHECK(CycleType({1, 3, 2}).parts() == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("partitions_of matches cycle types found in S_n") {
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<CycleType> seen;
        for (const auto& p : all_permutations(n)) seen.insert(cycle_type(p));
        const auto listed = partitions_of(n);
        CHECK(std::set<CycleType>(listed.begin(), listed.end()) == seen);
        CHECK(listed.size() == seen.size());
    }
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(5).front().parts() == std::vector<std::size_t>{5});
}

TEST_CASE("centralizer order matches brute force for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::map<CycleType, bool> done;
        for (const auto& s : all_permutations(n)) {
            const auto type = cycle_type(s);
            if (done[type]) continue;
            done[type] = true;
            CHECK(centralizer_order(s) == brute_centralizer(s).size());
            CHECK(class_size(s) * centralizer_order(s) == factorial(n));
        }
    }
}

TEST_CASE("centralizer samples commute") {
    RandomSource rng(31, 0);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto s = sample_uniform(1 + rng.uniform_below(15), rng);
        const auto t = sample_centralizer(s, rng);
        CHECK(compose(s, t) == compose(t, s));
    }
}

TEST_CASE("centralizer of a transposition in S_3") {
    const Permutation s{2, 1, 3};
    const auto exact = brute_centralizer(s);
    CHECK(exact == std::vector<Permutation>{Permutation{1, 2, 3}, Permutation{2, 1, 3}});
    RandomSource rng(32, 0);
    std::map<Permutation, int> counts;
    for (int i = 0; i < 40000; ++i) ++counts[sample_centralizer(s, rng)];
    CHECK(counts.size() == 2);
    for (const auto& [t, c] : counts) CHECK(std::abs(c / 40000.0 - 0.5) < 0.01);
}

TEST_CASE("centralizer sampler is uniform on the exact centralizer, n <= 4") {
    RandomSource rng(33, 0);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::set<CycleType> done;
        for (const auto& s : all_permutations(n)) {
            if (!done.insert(cycle_type(s)).second) continue;
            const auto exact = brute_centralizer(s);
            std::map<Permutation, int> counts;
            for (const auto& t : exact) counts[t] = 0;
            const int draws = 2000 * static_cast<int>(exact.size());
            for (int i = 0; i < draws; ++i) ++counts.at(sample_centralizer(s, rng));
            double chi2 = 0;
            for (const auto& [t, c] : counts) chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
            // 0.999 quantile of chi-square with up to 23 dof is 49.7.
            CHECK(chi2 < 50.0);
        }
    }
}

TEST_CASE("chain step from the identity is uniform") {
    RandomSource rng(34, 0);
    std::map<Permutation, int> counts;
    const ChainState start{Permutation::identity(3), 0};
    for (int i = 0; i < 60000; ++i) {
        const auto next = chain_step(start, rng);
        CHECK(next.step_count == 1);
        ++counts[next.current];
    }
    CHECK(counts.size() == 6);
    for (const auto& [p, c] : counts) CHECK(std::abs(c / 60000.0 - 1.0 / 6.0) < 0.01);
}

TEST_CASE("exact chain on S_3 is reversible with class-uniform stationary law") {
    const auto group = all_permutations(3);
    const std::size_t g = group.size();
    std::vector<std::vector<Rational>> K(g, std::vector<Rational>(g, 0));
    std::vector<Rational> pi(g);
    Rational norm = 0;
    for (std::size_t a = 0; a < g; ++a) {
        const auto centralizer = brute_centralizer(group[a]);
        for (std::size_t b = 0; b < g; ++b) {
            if (compose(group[a], group[b]) == compose(group[b], group[a])) K[a][b] = Rational(1, centralizer.size());
        }
        std::size_t cls = 0;
        for (const auto& x : group) cls += cycle_type(x) == cycle_type(group[a]) ? 1 : 0;
        pi[a] = Rational(1, cls);
        norm += pi[a];
    }
    for (auto& p : pi) p /= norm;
    for (std::size_t a = 0; a < g; ++a) {
        Rational row = 0, flow = 0;
        for (std::size_t b = 0; b < g; ++b) {
            CHECK(pi[a] * K[a][b] == pi[b] * K[b][a]);
            row += K[a][b];
            flow += pi[b] * K[b][a];
        }
        CHECK(row == 1);
        CHECK(flow == pi[a]);
    }
    std::map<CycleType, Rational> class_mass;
    for (std::size_t a = 0; a < g; ++a) class_mass[cycle_type(group[a])] += pi[a];
    for (const auto& [c, mass] : class_mass) CHECK(mass == Rational(1, 3));
}

TEST_CASE("partition sampler") {
    RandomSource rng(35, 0);
    const auto trivial = run_partition_sampler(1, 100, 10, rng);
    CHECK(trivial.reported == 90);
    CHECK(trivial.frequencies.size() == 1);
    CHECK(trivial.frequencies.begin()->first.parts() == std::vector<std::size_t>{1});

    CHECK_THROWS_AS(run_partition_sampler(3, 10, 10, rng), InvalidArgument);

    PartitionSamplerOptions options;
    options.check_commutation = true;
    std::vector<CycleType> stream;
    options.sink = [&](const CycleType& c) { stream.push_back(c); };
    const auto run = run_partition_sampler(6, 2000, 100, rng, options);
    CHECK(run.commute_checks == 2000);
    CHECK(stream.size() == 1900);
    std::map<CycleType, std::uint64_t> recount;
    for (const auto& c : stream) ++recount[c];
    CHECK(recount == run.frequencies);
}

TEST_CASE("stationary class frequencies are uniform") {
    for (std::size_t n : {3U, 4U, 5U}) {
        RandomSource rng(40 + n, 0);
        const auto run = run_partition_sampler(n, 1'000'000 + 1000, 1000, rng);
        const double p = 1.0 / static_cast<double>(partitions_of(n).size());
        for (const auto& part : partitions_of(n)) {
            CHECK(std::abs(static_cast<double>(run.frequencies.at(part)) / static_cast<double>(run.reported) - p) < 0.01);
        }
        CHECK(tv_to_uniform(run) < 0.02);
    }
}

TEST_CASE("same seed, same chain") {
    RandomSource a(50, 0), b(50, 0);
    const auto ra = run_partition_sampler(7, 5000, 0, a);
    const auto rb = run_partition_sampler(7, 5000, 0, b);
    CHECK(ra.frequencies == rb.frequencies);
}

}
