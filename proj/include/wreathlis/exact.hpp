#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "wreathlis/permutation.hpp"
#include "wreathlis/wreath.hpp"

namespace wreathlis {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact law of an integer statistic: sorted support, positive counts, and
/// rational mean and (population) variance.
struct DistributionTable {
    std::vector<std::int64_t> support;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    Rational mean;
    Rational variance;

    static DistributionTable from_counts(const std::map<std::int64_t, std::uint64_t>& counts);

    /// Count of a value, 0 if outside the support.
    std::uint64_t count_of(std::int64_t value) const;
};

nlohmann::json to_json(const DistributionTable& table);
nlohmann::json to_json(const Rational& q);

struct EnumerationCaps {
    std::size_t max_sym_degree = 8;
    std::uint64_t max_elements = 1'000'000;
};

enum class WreathStatistic { L, W, N };

const char* to_string(WreathStatistic stat);

/// m!, (k!)^n · n!, 2^n · n! as exact integers.
BigInt factorial(std::size_t m);
BigInt wreath_order(std::size_t n, std::size_t k);
BigInt hyperoctahedral_order(std::size_t n);

/// Law of `statistic` over all of S_m. Throws CapExceeded if m > max_sym_degree.
DistributionTable enumerate_sym(std::size_t m, const std::function<std::int64_t(const Permutation&)>& statistic,
                                const EnumerationCaps& caps = {});

/// Law of the LIS over S_m.
DistributionTable enumerate_sym_lis(std::size_t m, const EnumerationCaps& caps = {});

/**
 * Visits every element of S_k ≀ S_n. Order: odometer over (γ_1,…,γ_n, η)
 * with γ_1 the fastest digit and η the slowest, each digit running through
 * S_k (or S_n) in lexicographic one-line order.
 */
void for_each_wreath(std::size_t n, std::size_t k, const std::function<void(const WreathElement&)>& visit,
                     const EnumerationCaps& caps = {});

/// Exact law of L, W, or N over all of S_k ≀ S_n. Work is split across
/// `threads` by outer permutation; the result does not depend on the split.
DistributionTable enumerate_wreath(std::size_t n, std::size_t k, WreathStatistic stat,
                                   const EnumerationCaps& caps = {}, unsigned threads = 1);

/// Exact law of lis_signed over all of B_n.
DistributionTable enumerate_signed(std::size_t n, const EnumerationCaps& caps = {});

/// f = mean LIS over S_m, g = its variance, h = f + 2√g.
struct PermStats {
    std::size_t m = 0;
    Rational f;
    Rational g;
    double h = 0.0;
};

PermStats perm_stats(std::size_t m, const EnumerationCaps& caps = {});

struct MomentReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational mean_W;
    Rational mean_rhs;  ///< f(n)·f(k)
    Rational var_W;
    Rational var_rhs;   ///< f(n)g(k) + g(n)f(k)²
};

/// Exhaustively checks mean(W) = f(n)f(k) and var(W) = f(n)g(k) + g(n)f(k)²
/// in exact arithmetic. Throws InvariantViolation when either fails, which
/// happens if the block choice looks at block contents.
MomentReport verify_moment_identities(std::size_t n, std::size_t k, const EnumerationCaps& caps = {},
                                      unsigned threads = 1);

nlohmann::json to_json(const MomentReport& report);

}  // namespace wreathlis
