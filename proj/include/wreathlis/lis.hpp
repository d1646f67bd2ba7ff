#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wreathlis/permutation.hpp"
#include "wreathlis/wreath.hpp"

namespace wreathlis {

/// LIS length plus one maximum-length increasing subsequence, given as
/// strictly increasing 1-based positions.
struct LisWitness {
    std::size_t length = 0;
    std::vector<std::size_t> indices;
};

/**
 * Longest increasing subsequence by patience sorting, O(m log m).
 *
 * The witness is the lexicographically smallest position sequence among all
 * maximum-length increasing subsequences. It is built from the suffix LIS
 * lengths (patience sorting run right to left) by a single greedy left to
 * right scan, so it is a deterministic function of the word.
 *
 * Throws InvalidArgument if two entries are equal.
 */
LisWitness lis_fast(std::span<const Symbol> word);

/// Witness construction of lis_fast without the duplicate check, writing into
/// caller-owned buffers. Returns the LIS length; `indices` receives the witness.
std::size_t lis_witness_unchecked(std::span<const Symbol> word, std::vector<std::size_t>& suffix,
                                  std::vector<Symbol>& tops, std::vector<std::size_t>& indices);

/// Length only, same duplicate check as lis_fast.
std::size_t lis_length(std::span<const Symbol> word);

/// Length only, no duplicate check; `tops` is caller-owned scratch.
std::size_t lis_length_unchecked(std::span<const Symbol> word, std::vector<Symbol>& tops);

/// Quadratic dynamic program, independent of the patience-sorting code path.
std::size_t lis_oracle(std::span<const Symbol> word);

/// LIS of signed_word(s) in the usual order on {−n..−1,1..n}.
std::size_t lis_signed(const SignedPermutation& s);

/// Longest increasing subsequence among positions sharing one color.
std::size_t lis_colored(const ColoredPermutation& c);

bool has_duplicates(std::span<const Symbol> word);

}  // namespace wreathlis
