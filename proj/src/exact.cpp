#include "wreathlis/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "wreathlis/decomp.hpp"
#include "wreathlis/error.hpp"
#include "wreathlis/lis.hpp"

namespace wreathlis {

DistributionTable DistributionTable::from_counts(const std::map<std::int64_t, std::uint64_t>& counts) {
    DistributionTable t;
    BigInt sum = 0, sum_sq = 0;
    for (const auto& [value, count] : counts) {
        if (count == 0) continue;
        t.support.push_back(value);
        t.counts.push_back(count);
        t.total += count;
        sum += BigInt(value) * count;
        sum_sq += BigInt(value) * value * count;
    }
    if (t.total > 0) {
        t.mean = Rational(sum, BigInt(t.total));
        t.variance = Rational(sum_sq, BigInt(t.total)) - t.mean * t.mean;
    }
    return t;
}

std::uint64_t DistributionTable::count_of(std::int64_t value) const {
    auto it = std::lower_bound(support.begin(), support.end(), value);
    if (it == support.end() || *it != value) return 0;
    return counts[static_cast<std::size_t>(it - support.begin())];
}

namespace {

nlohmann::json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

}  // namespace

nlohmann::json to_json(const Rational& q) {
    return {{"num", big_to_json(numerator(q))}, {"den", big_to_json(denominator(q))}};
}

nlohmann::json to_json(const DistributionTable& table) {
    return {{"support", table.support},
            {"counts", table.counts},
            {"total", table.total},
            {"mean", to_json(table.mean)},
            {"var", to_json(table.variance)}};
}

const char* to_string(WreathStatistic stat) {
    switch (stat) {
        case WreathStatistic::L: return "L";
        case WreathStatistic::W: return "W";
        case WreathStatistic::N: return "N";
    }
    return "?";
}

BigInt factorial(std::size_t m) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= m; ++i) out *= i;
    return out;
}

BigInt wreath_order(std::size_t n, std::size_t k) { return pow(factorial(k), static_cast<unsigned>(n)) * factorial(n); }

BigInt hyperoctahedral_order(std::size_t n) { return pow(BigInt(2), static_cast<unsigned>(n)) * factorial(n); }

DistributionTable enumerate_sym(std::size_t m, const std::function<std::int64_t(const Permutation&)>& statistic,
                                const EnumerationCaps& caps) {
    if (m > caps.max_sym_degree) {
        throw CapExceeded("enumerate_sym: degree " + std::to_string(m) + " exceeds cap " +
                          std::to_string(caps.max_sym_degree) + " (raise with --cap)");
    }
    std::map<std::int64_t, std::uint64_t> counts;
    for (const auto& p : all_permutations(m)) ++counts[statistic(p)];
    return DistributionTable::from_counts(counts);
}

DistributionTable enumerate_sym_lis(std::size_t m, const EnumerationCaps& caps) {
    return enumerate_sym(
        m, [](const Permutation& p) { return static_cast<std::int64_t>(lis_fast(p.images()).length); }, caps);
}

namespace {

void check_wreath_cap(std::size_t n, std::size_t k, const EnumerationCaps& caps) {
    if (k == 0) throw InvalidArgument("wreath enumeration: k must be positive");
    if (wreath_order(n, k) > caps.max_elements) {
        throw CapExceeded("wreath enumeration: group order (k!)^n n! = " + wreath_order(n, k).str() +
                          " exceeds cap " + std::to_string(caps.max_elements) + " (raise with --cap)");
    }
}

/// Odometer over inner tuples for a fixed η, maintaining a flat inner buffer.
template <typename Visit>
void for_each_inner_tuple(std::size_t n, std::size_t k, const std::vector<Permutation>& sym_k,
                          std::vector<Symbol>& inner_flat, Visit&& visit) {
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(sym_k[0].images().begin(), sym_k[0].images().end(), inner_flat.begin() + static_cast<std::ptrdiff_t>(i * k));
    }
    while (true) {
        visit(digits);
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == sym_k.size()) {
            digits[pos] = 0;
            std::copy(sym_k[0].images().begin(), sym_k[0].images().end(),
                      inner_flat.begin() + static_cast<std::ptrdiff_t>(pos * k));
            ++pos;
        }
        if (pos == n) return;
        const auto images = sym_k[digits[pos]].images();
        std::copy(images.begin(), images.end(), inner_flat.begin() + static_cast<std::ptrdiff_t>(pos * k));
    }
}

}  // namespace

void for_each_wreath(std::size_t n, std::size_t k, const std::function<void(const WreathElement&)>& visit,
                     const EnumerationCaps& caps) {
    check_wreath_cap(n, k, caps);
    const auto sym_k = all_permutations(k);
    std::vector<Symbol> inner_flat(n * k);
    for (const auto& eta : all_permutations(n)) {
        for_each_inner_tuple(n, k, sym_k, inner_flat, [&](const std::vector<std::size_t>& digits) {
            std::vector<Permutation> inner;
            inner.reserve(n);
            for (std::size_t d : digits) inner.push_back(sym_k[d]);
            visit(WreathElement(k, n, std::move(inner), eta));
        });
    }
}

DistributionTable enumerate_wreath(std::size_t n, std::size_t k, WreathStatistic stat, const EnumerationCaps& caps,
                                   unsigned threads) {
    check_wreath_cap(n, k, caps);
    const auto sym_k = all_permutations(k);
    const auto sym_n = all_permutations(n);
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(sym_n.size())));

    std::vector<std::map<std::int64_t, std::uint64_t>> partial(threads);
    auto work = [&](unsigned worker) {
        auto& counts = partial[worker];
        std::vector<Symbol> inner_flat(n * k), word(n * k), tops;
        DecompScratch scratch;
        for (std::size_t e = worker; e < sym_n.size(); e += threads) {
            const auto outer = sym_n[e].images();
            for_each_inner_tuple(n, k, sym_k, inner_flat, [&](const std::vector<std::size_t>&) {
                std::int64_t value = 0;
                if (stat == WreathStatistic::L) {
                    wreath_word_into(n, k, inner_flat, outer, word);
                    value = static_cast<std::int64_t>(lis_length_unchecked(word, tops));
                } else {
                    const auto bs = block_statistics(n, k, inner_flat, outer, scratch);
                    value = static_cast<std::int64_t>(stat == WreathStatistic::W ? bs.W : bs.N);
                }
                ++counts[value];
            });
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    std::map<std::int64_t, std::uint64_t> merged;
    for (const auto& counts : partial) {
        for (const auto& [value, count] : counts) merged[value] += count;
    }
    return DistributionTable::from_counts(merged);
}

DistributionTable enumerate_signed(std::size_t n, const EnumerationCaps& caps) {
    if (hyperoctahedral_order(n) > caps.max_elements) {
        throw CapExceeded("signed enumeration: group order 2^n n! = " + hyperoctahedral_order(n).str() +
                          " exceeds cap " + std::to_string(caps.max_elements) + " (raise with --cap)");
    }
    std::map<std::int64_t, std::uint64_t> counts;
    for (const auto& s : all_signed(n)) ++counts[static_cast<std::int64_t>(lis_signed(s))];
    return DistributionTable::from_counts(counts);
}

PermStats perm_stats(std::size_t m, const EnumerationCaps& caps) {
    const auto table = enumerate_sym_lis(m, caps);
    PermStats s;
    s.m = m;
    s.f = table.mean;
    s.g = table.variance;
    s.h = static_cast<double>(s.f) + 2.0 * std::sqrt(static_cast<double>(s.g));
    return s;
}

MomentReport verify_moment_identities(std::size_t n, std::size_t k, const EnumerationCaps& caps, unsigned threads) {
    const auto w = enumerate_wreath(n, k, WreathStatistic::W, caps, threads);
    const auto outer = perm_stats(n, caps);
    const auto block = perm_stats(k, caps);

    MomentReport r;
    r.n = n;
    r.k = k;
    r.mean_W = w.mean;
    r.var_W = w.variance;
    r.mean_rhs = outer.f * block.f;
    r.var_rhs = outer.f * block.g + outer.g * block.f * block.f;
    if (r.mean_W != r.mean_rhs) {
        throw InvariantViolation("mean(W) = " + r.mean_W.str() + " but f(n)f(k) = " + r.mean_rhs.str());
    }
    if (r.var_W != r.var_rhs) {
        throw InvariantViolation("var(W) = " + r.var_W.str() + " but f(n)g(k)+g(n)f(k)^2 = " + r.var_rhs.str());
    }
    return r;
}

nlohmann::json to_json(const MomentReport& report) {
    return {{"n", report.n},
            {"k", report.k},
            {"mean_W", to_json(report.mean_W)},
            {"mean_rhs", to_json(report.mean_rhs)},
            {"var_W", to_json(report.var_W)},
            {"var_rhs", to_json(report.var_rhs)}};
}

}  // namespace wreathlis
