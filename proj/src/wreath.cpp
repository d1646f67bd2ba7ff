#include "wreathlis/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wreathlis/error.hpp"

namespace wreathlis {

WreathElement::WreathElement(std::size_t k, std::size_t n, std::vector<Permutation> inner,
                             Permutation outer)
    : k_(k), n_(n), inner_(std::move(inner)), outer_(std::move(outer)) {
    if (k_ == 0) throw InvalidArgument("wreath element: block size k must be positive");
    if (inner_.size() != n_) {
        throw InvalidArgument("wreath element: expected " + std::to_string(n_) +
                              " inner permutations, got " + std::to_string(inner_.size()));
    }
    for (const auto& g : inner_) {
        if (g.degree() != k_) throw InvalidArgument("wreath element: inner permutation of wrong degree");
    }
    if (outer_.degree() != n_) throw InvalidArgument("wreath element: outer permutation of wrong degree");
}

WreathElement WreathElement::identity(std::size_t n, std::size_t k) {
    return WreathElement(k, n, std::vector<Permutation>(n, Permutation::identity(k)),
                         Permutation::identity(n));
}

void wreath_word_into(std::size_t n, std::size_t k, std::span<const Symbol> inner_flat,
                      std::span<const Symbol> outer, std::span<Symbol> word) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dest = static_cast<std::size_t>(outer[i] - 1) * k;
        const auto offset = static_cast<Symbol>(i * k);
        for (std::size_t j = 0; j < k; ++j) word[dest + j] = offset + inner_flat[i * k + j];
    }
}

Word to_word(const WreathElement& w) {
    const std::size_t n = w.n(), k = w.k();
    Word word(n * k);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dest = static_cast<std::size_t>(w.outer()(i + 1) - 1) * k;
        const auto offset = static_cast<Symbol>(i * k);
        const auto images = w.inner()[i].images();
        for (std::size_t j = 0; j < k; ++j) word[dest + j] = offset + images[j];
    }
    return word;
}

WreathElement wreath_from_word(std::span<const Symbol> word, std::size_t n, std::size_t k) {
    if (k == 0 || word.size() != n * k) throw InvalidArgument("wreath_from_word: length is not n*k");
    if (!is_permutation_word(word)) throw InvalidArgument("wreath_from_word: not a permutation word");
    std::vector<Permutation> inner(n);
    std::vector<Symbol> outer(n);
    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t block = static_cast<std::size_t>(word[b * k] - 1) / k;
        std::vector<Symbol> images(k);
        for (std::size_t j = 0; j < k; ++j) {
            const Symbol v = word[b * k + j];
            if (static_cast<std::size_t>(v - 1) / k != block) {
                throw InvalidArgument("wreath_from_word: output block " + std::to_string(b + 1) +
                                      " mixes input blocks");
            }
            images[j] = v - static_cast<Symbol>(block * k);
        }
        inner[block] = Permutation::from_trusted(std::move(images));
        outer[block] = static_cast<Symbol>(b + 1);
    }
    return WreathElement(k, n, std::move(inner), Permutation::from_trusted(std::move(outer)));
}

void sample_wreath_into(std::size_t n, std::size_t k, RandomSource& rng, std::span<Symbol> inner_flat,
                        std::span<Symbol> outer) {
    for (std::size_t i = 0; i < n; ++i) {
        auto block = inner_flat.subspan(i * k, k);
        std::iota(block.begin(), block.end(), Symbol{1});
        shuffle(block, rng);
    }
    std::iota(outer.begin(), outer.end(), Symbol{1});
    shuffle(outer, rng);
}

WreathElement sample_wreath(std::size_t n, std::size_t k, RandomSource& rng) {
    if (n == 0 || k == 0) throw InvalidArgument("sample_wreath: n and k must be positive");
    std::vector<Symbol> flat(n * k), outer(n);
    sample_wreath_into(n, k, rng, flat, outer);
    std::vector<Permutation> inner;
    inner.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        inner.push_back(Permutation::from_trusted({flat.begin() + static_cast<std::ptrdiff_t>(i * k),
                                                   flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * k)}));
    }
    return WreathElement(k, n, std::move(inner), Permutation::from_trusted(std::move(outer)));
}

SignedPermutation::SignedPermutation(Permutation underlying, std::vector<std::int8_t> signs)
    : underlying_(std::move(underlying)), signs_(std::move(signs)) {
    if (signs_.size() != underlying_.degree()) throw InvalidArgument("signed permutation: sign count mismatch");
    for (auto s : signs_) {
        if (s != 1 && s != -1) throw InvalidArgument("signed permutation: signs must be +1 or -1");
    }
}

SignedPermutation to_signed(const WreathElement& w) {
    if (w.k() != 2) throw InvalidArgument("to_signed: requires block size k == 2");
    std::vector<std::int8_t> signs(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) signs[i] = w.inner()[i].is_identity() ? 1 : -1;
    return SignedPermutation(w.outer(), std::move(signs));
}

Word signed_word(const SignedPermutation& s) {
    const std::size_t n = s.n();
    Word word(2 * n);
    for (std::size_t j = 1; j <= n; ++j) {
        const Symbol image = s.underlying()(j);
        const Symbol value = s.signs()[static_cast<std::size_t>(image - 1)] * image;
        word[n + j - 1] = value;
        word[n - j] = -value;
    }
    return word;
}

std::vector<SignedPermutation> all_signed(std::size_t n) {
    std::vector<SignedPermutation> out;
    for (const auto& p : all_permutations(n)) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::int8_t> signs(n);
            for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1U ? -1 : 1;
            out.emplace_back(p, std::move(signs));
        }
    }
    return out;
}

ColoredPermutation::ColoredPermutation(Permutation perm, std::vector<std::int32_t> colors,
                                       std::int32_t num_colors)
    : perm_(std::move(perm)), colors_(std::move(colors)), num_colors_(num_colors) {
    if (num_colors_ < 1) throw InvalidArgument("colored permutation: need at least one color");
    if (colors_.size() != perm_.degree()) throw InvalidArgument("colored permutation: color count mismatch");
    for (auto c : colors_) {
        if (c < 1 || c > num_colors_) throw InvalidArgument("colored permutation: color out of range");
    }
}

ColoredPermutation sample_colored(std::size_t n, std::int32_t num_colors, RandomSource& rng) {
    if (num_colors < 1) throw InvalidArgument("sample_colored: need at least one color");
    auto perm = sample_uniform(n, rng);
    std::vector<std::int32_t> colors(n);
    for (auto& c : colors) c = 1 + static_cast<std::int32_t>(rng.uniform_below(static_cast<std::uint64_t>(num_colors)));
    return ColoredPermutation(std::move(perm), std::move(colors), num_colors);
}

}  // namespace wreathlis
