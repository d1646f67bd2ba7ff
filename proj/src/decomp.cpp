#include "wreathlis/decomp.hpp"

#include "wreathlis/lis.hpp"

namespace wreathlis {

BlockDecomposition decompose(const WreathElement& w) {
    BlockDecomposition d;
    d.block_word = inverse(w.outer());
    const LisWitness blocks = lis_fast(d.block_word.images());
    d.N = blocks.length;
    d.chosen_blocks.reserve(d.N);
    for (std::size_t pos : blocks.indices) {
        d.chosen_blocks.push_back(static_cast<std::size_t>(d.block_word(pos)));
    }
    d.per_block_lis.reserve(w.n());
    for (const auto& g : w.inner()) d.per_block_lis.push_back(lis_fast(g.images()).length);
    for (std::size_t i : d.chosen_blocks) d.W += d.per_block_lis[i - 1];
    return d;
}

bool verify_lower_bound(const WreathElement& w) {
    return decompose(w).W <= lis_fast(to_word(w)).length;
}

BlockStatistics block_statistics(std::size_t n, std::size_t k, std::span<const Symbol> inner_flat,
                                 std::span<const Symbol> outer, DecompScratch& scratch) {
    scratch.block_word.resize(n);
    for (std::size_t i = 0; i < n; ++i) scratch.block_word[static_cast<std::size_t>(outer[i] - 1)] = static_cast<Symbol>(i + 1);

    BlockStatistics out;
    out.N = lis_witness_unchecked(scratch.block_word, scratch.suffix, scratch.tops, scratch.witness);
    for (std::size_t pos : scratch.witness) {
        const auto block = static_cast<std::size_t>(scratch.block_word[pos - 1] - 1);
        out.W += lis_length_unchecked(inner_flat.subspan(block * k, k), scratch.tops);
    }
    return out;
}

}  // namespace wreathlis
