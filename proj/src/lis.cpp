#include "wreathlis/lis.hpp"

#include <algorithm>

#include "wreathlis/error.hpp"

namespace wreathlis {

bool has_duplicates(std::span<const Symbol> word) {
    if (word.size() < 2) return false;
    const auto [lo, hi] = std::minmax_element(word.begin(), word.end());
    const auto range = static_cast<std::uint64_t>(static_cast<std::int64_t>(*hi) - *lo);
    if (range < 4 * static_cast<std::uint64_t>(word.size())) {
        std::vector<bool> seen(range + 1, false);
        for (Symbol v : word) {
            auto slot = static_cast<std::size_t>(static_cast<std::int64_t>(v) - *lo);
            if (seen[slot]) return true;
            seen[slot] = true;
        }
        return false;
    }
    std::vector<Symbol> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

namespace {

void require_distinct(std::span<const Symbol> word, const char* who) {
    if (has_duplicates(word)) throw InvalidArgument(std::string(who) + ": word has duplicate entries");
}

}  // namespace

std::size_t lis_length_unchecked(std::span<const Symbol> word, std::vector<Symbol>& tops) {
    tops.clear();
    for (Symbol v : word) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            *it = v;
        }
    }
    return tops.size();
}

std::size_t lis_length(std::span<const Symbol> word) {
    require_distinct(word, "lis_length");
    std::vector<Symbol> tops;
    return lis_length_unchecked(word, tops);
}

std::size_t lis_witness_unchecked(std::span<const Symbol> word, std::vector<std::size_t>& suffix,
                                  std::vector<Symbol>& tops, std::vector<std::size_t>& indices) {
    const std::size_t m = word.size();

    // suffix[i]: longest increasing subsequence starting at position i.
    // Right-to-left patience over negated values.
    suffix.resize(m);
    tops.clear();
    for (std::size_t i = m; i-- > 0;) {
        const Symbol v = -word[i];
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        suffix[i] = static_cast<std::size_t>(it - tops.begin()) + 1;
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            *it = v;
        }
    }

    // Any later position above the previous pick has suffix <= need, so the
    // first position with suffix == need is the lexicographically smallest choice.
    const std::size_t length = tops.size();
    indices.clear();
    std::size_t need = length;
    for (std::size_t i = 0; i < m && need > 0; ++i) {
        if (suffix[i] == need && (indices.empty() || word[i] > word[indices.back() - 1])) {
            indices.push_back(i + 1);
            --need;
        }
    }
    return length;
}

LisWitness lis_fast(std::span<const Symbol> word) {
    require_distinct(word, "lis_fast");
    std::vector<std::size_t> suffix;
    std::vector<Symbol> tops;
    LisWitness out;
    out.length = lis_witness_unchecked(word, suffix, tops, out.indices);
    return out;
}

std::size_t lis_oracle(std::span<const Symbol> word) {
    {
        std::vector<Symbol> sorted(word.begin(), word.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InvalidArgument("lis_oracle: word has duplicate entries");
        }
    }
    // ending[j]: longest increasing subsequence ending at position j.
    std::vector<std::int32_t> ending(word.size());
    std::int32_t best = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
        const Symbol wj = word[j];
        std::int32_t prefix = 0;
        for (std::size_t i = 0; i < j; ++i) prefix = std::max(prefix, word[i] < wj ? ending[i] : 0);
        ending[j] = prefix + 1;
        best = std::max(best, ending[j]);
    }
    return static_cast<std::size_t>(best);
}

std::size_t lis_signed(const SignedPermutation& s) {
    const Word word = signed_word(s);
    std::vector<Symbol> tops;
    return lis_length_unchecked(word, tops);
}

std::size_t lis_colored(const ColoredPermutation& c) {
    const auto images = c.perm().images();
    std::vector<std::vector<Symbol>> by_color(static_cast<std::size_t>(c.num_colors()));
    for (std::size_t j = 0; j < images.size(); ++j) {
        by_color[static_cast<std::size_t>(c.colors()[j] - 1)].push_back(images[j]);
    }
    std::size_t best = 0;
    std::vector<Symbol> tops;
    for (const auto& sub : by_color) best = std::max(best, lis_length_unchecked(sub, tops));
    return best;
}

}  // namespace wreathlis
