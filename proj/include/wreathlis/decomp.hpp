#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wreathlis/permutation.hpp"
#include "wreathlis/wreath.hpp"

namespace wreathlis {

/**
 * The block-level lower bound for the LIS of a wreath word.
 *
 * block_word[b] is the original index of the block sitting at output
 * position b. N is its LIS length and chosen_blocks the original indices of
 * the canonical LIS witness (i_1 < … < i_N). per_block_lis[i] is the LIS of
 * γ_i, and W sums per_block_lis over chosen_blocks. Concatenating the within
 * block LIS of the chosen blocks gives an increasing subsequence of the word,
 * so W <= L always.
 */
struct BlockDecomposition {
    Permutation block_word;
    std::size_t N = 0;
    std::vector<std::size_t> chosen_blocks;
    std::vector<std::size_t> per_block_lis;
    std::size_t W = 0;
};

/// The chosen blocks depend on η alone (through block_word), never on the
/// contents of any block.
BlockDecomposition decompose(const WreathElement& w);

/// W <= LIS(to_word(w)).
bool verify_lower_bound(const WreathElement& w);

/// Reusable buffers for block_statistics.
struct DecompScratch {
    std::vector<Symbol> block_word;
    std::vector<std::size_t> suffix;
    std::vector<Symbol> tops;
    std::vector<std::size_t> witness;
};

struct BlockStatistics {
    std::size_t N = 0;
    std::size_t W = 0;
};

/// (N, W) from flat buffers (see sample_wreath_into); agrees with decompose.
BlockStatistics block_statistics(std::size_t n, std::size_t k, std::span<const Symbol> inner_flat,
                                 std::span<const Symbol> outer, DecompScratch& scratch);

}  // namespace wreathlis
