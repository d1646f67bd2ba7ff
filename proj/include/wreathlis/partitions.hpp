#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wreathlis/exact.hpp"
#include "wreathlis/permutation.hpp"
#include "wreathlis/random.hpp"

namespace wreathlis {

/// A partition of n: weakly decreasing positive parts.
class CycleType {
public:
    CycleType() = default;
    /// Parts are sorted descending; zero parts are rejected.
    explicit CycleType(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept;  ///< sum of parts

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// "[3,1,1]"
std::string to_string(const CycleType& c);

/// Cycles with the minimum element first; cycles of equal length ordered by
/// their minimum element, shorter lengths first.
std::vector<std::vector<Symbol>> canonical_cycles(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<CycleType> partitions_of(std::size_t n);

/// |C(s)| = ∏ i^{a_i} a_i!, a_i the number of i-cycles.
BigInt centralizer_order(const Permutation& s);

/// Size of the conjugacy class of s, n! / |C(s)|.
BigInt class_size(const Permutation& s);

/**
 * Uniform element of the centralizer of s. For each cycle length i, the a_i
 * cycles of that length are permuted uniformly and each cycle gets an
 * independent uniform rotation in {0..i-1}; t sends the x-th point of cycle c
 * to the (x + r_c)-th point of the cycle that c is sent to.
 */
Permutation sample_centralizer(const Permutation& s, RandomSource& rng);

struct ChainState {
    Permutation current;
    std::uint64_t step_count = 0;
};

/// One step of the commuting-graph walk.
ChainState chain_step(const ChainState& state, RandomSource& rng);

struct PartitionRun {
    std::size_t n = 0;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t reported = 0;
    std::map<CycleType, std::uint64_t> frequencies;
    std::uint64_t commute_checks = 0;
};

struct PartitionSamplerOptions {
    /// Verify that every step commutes with its predecessor.
    bool check_commutation = false;
    /// Called with each reported class, in order.
    std::function<void(const CycleType&)> sink;
};

/**
 * Runs `steps` chain steps from the identity of S_n and reports the cycle
 * type after every step past the first `burn_in`, i.e. steps - burn_in
 * reports. Throws InvariantViolation if a commutation check fails.
 */
PartitionRun run_partition_sampler(std::size_t n, std::uint64_t steps, std::uint64_t burn_in, RandomSource& rng,
                                   const PartitionSamplerOptions& options = {});

/// Total-variation distance of the run's class frequencies to the uniform law
/// on all partitions of n.
double tv_to_uniform(const PartitionRun& run);

}  // namespace wreathlis
