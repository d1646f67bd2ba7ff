#include <doctest.h>

#include <map>
#include <tuple>

#include "wreathlis/decomp.hpp"
#include "wreathlis/exact.hpp"
#include "wreathlis/lis.hpp"

using namespace wreathlis;

namespace {

struct OracleDecomposition {
    std::vector<std::size_t> chosen;
    std::size_t W = 0;
};

// Straight from the definition, reading only the output word: block_word from
// the block of each output position, every position subset of block_word
// tried, smallest position sequence among the longest kept, within-block LIS
// by the quadratic oracle.
OracleDecomposition oracle_decompose(const WreathElement& w) {
    const auto word = to_word(w);
    const std::size_t n = w.n(), k = w.k();
    Word block_word(n);
    for (std::size_t b = 0; b < n; ++b) block_word[b] = static_cast<Symbol>((word[b * k] - 1) / static_cast<Symbol>(k) + 1);

    std::vector<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> pos;
        bool increasing = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1U)) continue;
            if (!pos.empty() && block_word[pos.back()] >= block_word[i]) increasing = false;
            pos.push_back(i);
        }
        if (increasing && (pos.size() > best.size() || (pos.size() == best.size() && pos < best))) best = pos;
    }
    OracleDecomposition out;
    for (std::size_t p : best) {
        const auto block = static_cast<std::size_t>(block_word[p]);
        out.chosen.push_back(block);
        Word contents(word.begin() + static_cast<std::ptrdiff_t>(p * k), word.begin() + static_cast<std::ptrdiff_t>((p + 1) * k));
        out.W += lis_oracle(contents);
    }
    return out;
}

WreathElement table_element(const Word& word) { return wreath_from_word(word, 2, 2); }

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("worked example") {
    const WreathElement w(2, 3, {Permutation{2, 1}, Permutation{1, 2}, Permutation{2, 1}}, Permutation{2, 3, 1});
    const auto d = decompose(w);
    CHECK(d.block_word == Permutation{3, 1, 2});
    CHECK(d.N == 2);
    CHECK(d.chosen_blocks == std::vector<std::size_t>{1, 2});
    CHECK(d.per_block_lis == std::vector<std::size_t>{1, 2, 1});
    CHECK(d.W == 3);
    CHECK(d.W <= lis_fast(to_word(w)).length);
}

TEST_CASE("identity attains equality") {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 1}, {3, 4}, {7, 2}}) {
        const auto w = WreathElement::identity(n, k);
        CHECK(decompose(w).W == n * k);
        CHECK(lis_fast(to_word(w)).length == n * k);
        CHECK(verify_lower_bound(w));
    }
}

TEST_CASE("W over G_{2,2} in enumeration order") {
    const std::vector<Word> table = {{1, 2, 3, 4}, {2, 1, 3, 4}, {1, 2, 4, 3}, {2, 1, 4, 3},
                                     {3, 4, 1, 2}, {4, 3, 1, 2}, {3, 4, 2, 1}, {4, 3, 2, 1}};
    std::vector<std::size_t> oracle_w, w;
    for (const auto& word : table) {
        oracle_w.push_back(oracle_decompose(table_element(word)).W);
        w.push_back(decompose(table_element(word)).W);
    }
    CHECK(oracle_w == std::vector<std::size_t>{4, 3, 3, 2, 2, 1, 2, 1});
    CHECK(w == oracle_w);
}

TEST_CASE("decompose matches the definition oracle exhaustively") {
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        std::size_t mismatches = 0, violations = 0;
        for_each_wreath(n, k, [&](const WreathElement& w) {
            const auto d = decompose(w);
            const auto o = oracle_decompose(w);
            mismatches += (d.chosen_blocks != o.chosen || d.W != o.W) ? 1 : 0;
            violations += verify_lower_bound(w) ? 0 : 1;
        });
        CHECK(mismatches == 0);
        CHECK(violations == 0);
    }
}

TEST_CASE("structure invariants on random draws") {
    RandomSource rng(12, 0);
    for (int rep = 0; rep < 300; ++rep) {
        const auto n = 1 + rng.uniform_below(30), k = 1 + rng.uniform_below(10);
        const auto w = sample_wreath(n, k, rng);
        const auto d = decompose(w);
        CHECK(d.N == d.chosen_blocks.size());
        CHECK(std::is_sorted(d.chosen_blocks.begin(), d.chosen_blocks.end()));
        CHECK(std::adjacent_find(d.chosen_blocks.begin(), d.chosen_blocks.end()) == d.chosen_blocks.end());
        std::size_t sum = 0;
        for (auto i : d.chosen_blocks) sum += d.per_block_lis[i - 1];
        CHECK(d.W == sum);
        for (auto ni : d.per_block_lis) CHECK((ni >= 1 && ni <= k));
        CHECK(d.W <= lis_fast(to_word(w)).length);
    }
}

TEST_CASE("lower bound on random draws at (100, 20)") {
    RandomSource rng(13, 0);
    int violations = 0;
    for (int rep = 0; rep < 2000; ++rep) violations += verify_lower_bound(sample_wreath(100, 20, rng)) ? 0 : 1;
    CHECK(violations == 0);
}

TEST_CASE("chosen blocks ignore block contents") {
    RandomSource rng(14, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng.uniform_below(25), k = 1 + rng.uniform_below(6);
        const auto base = sample_wreath(n, k, rng);
        const auto reference = decompose(base).chosen_blocks;
        for (int redraw = 0; redraw < 5; ++redraw) {
            std::vector<Permutation> inner;
            for (std::size_t i = 0; i < n; ++i) inner.push_back(sample_uniform(k, rng));
            CHECK(decompose(WreathElement(k, n, std::move(inner), base.outer())).chosen_blocks == reference);
        }
    }
}

TEST_CASE("block_statistics agrees with decompose") {
    RandomSource rng(15, 0);
    DecompScratch scratch;
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rng.uniform_below(40), k = 1 + rng.uniform_below(8);
        std::vector<Symbol> inner(n * k), outer(n);
        sample_wreath_into(n, k, rng, inner, outer);
        std::vector<Permutation> gammas;
        for (std::size_t i = 0; i < n; ++i) {
            gammas.push_back(Permutation({inner.begin() + static_cast<std::ptrdiff_t>(i * k),
                                          inner.begin() + static_cast<std::ptrdiff_t>((i + 1) * k)}));
        }
        const auto d = decompose(WreathElement(k, n, std::move(gammas), Permutation(outer)));
        const auto bs = block_statistics(n, k, inner, outer, scratch);
        CHECK(bs.N == d.N);
        CHECK(bs.W == d.W);
    }
}

TEST_CASE("N is independent of the block LIS values on G_{2,2}") {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> joint;
    std::map<std::size_t, int> pN, p1, p2;
    int total = 0;
    for_each_wreath(2, 2, [&](const WreathElement& w) {
        const auto d = decompose(w);
        ++joint[{d.N, d.per_block_lis[0], d.per_block_lis[1]}];
        ++pN[d.N];
        ++p1[d.per_block_lis[0]];
        ++p2[d.per_block_lis[1]];
        ++total;
    });
    REQUIRE(total == 8);
    for (const auto& [a, ca] : pN) {
        for (const auto& [b, cb] : p1) {
            for (const auto& [c, cc] : p2) {
                const auto it = joint.find({a, b, c});
                const int cj = it == joint.end() ? 0 : it->second;
                CHECK(Rational(cj, total) == Rational(ca, total) * Rational(cb, total) * Rational(cc, total));
            }
        }
    }
}

TEST_CASE("exact moments of W on G_{2,2}") {
    Rational sum = 0, sum_sq = 0;
    int total = 0;
    for_each_wreath(2, 2, [&](const WreathElement& w) {
        const auto W = static_cast<long>(decompose(w).W);
        sum += W;
        sum_sq += W * W;
        ++total;
    });
    const Rational mean = sum / total;
    const Rational var = sum_sq / total - mean * mean;
    CHECK(mean == Rational(9, 4));
    CHECK(var == Rational(15, 16));
    // f(2) = 3/2, g(2) = 1/4
    const Rational f2(3, 2), g2(1, 4);
    CHECK(mean == f2 * f2);
    CHECK(var == f2 * g2 + g2 * f2 * f2);
}

}
