#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wreathlis/permutation.hpp"
#include "wreathlis/random.hpp"

namespace wreathlis {

/**
 * An element (γ_1, …, γ_n; η) of S_k ≀ S_n acting on {1..nk}.
 *
 * Block i holds the symbols (i-1)k+1 .. ik. The action first rearranges each
 * block by its inner permutation (position j of block i receives
 * (i-1)k + γ_i(j)), then moves input block i to output block position η(i).
 * Equivalently, output block b holds input block η⁻¹(b).
 */
class WreathElement {
public:
    /// Throws InvalidArgument unless inner.size() == n, every inner has
    /// degree k, outer has degree n, and k >= 1.
    WreathElement(std::size_t k, std::size_t n, std::vector<Permutation> inner, Permutation outer);

    static WreathElement identity(std::size_t n, std::size_t k);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<Permutation>& inner() const noexcept { return inner_; }
    const Permutation& outer() const noexcept { return outer_; }

    friend bool operator==(const WreathElement&, const WreathElement&) = default;

private:
    std::size_t k_;
    std::size_t n_;
    std::vector<Permutation> inner_;
    Permutation outer_;
};

/// The image word of 1..nk under w; always a permutation of {1..nk}.
Word to_word(const WreathElement& w);

/// Recovers the element whose word is `word`. Throws InvalidArgument when the
/// word is not in the image of S_k ≀ S_n.
WreathElement wreath_from_word(std::span<const Symbol> word, std::size_t n, std::size_t k);

/// Uniform element: γ_1..γ_n then η, each drawn by Fisher-Yates in that order.
WreathElement sample_wreath(std::size_t n, std::size_t k, RandomSource& rng);

/// Flat-buffer form of sample_wreath for allocation-free inner loops.
/// inner_flat holds γ_i at [(i-1)k, ik); draws are identical to sample_wreath.
void sample_wreath_into(std::size_t n, std::size_t k, RandomSource& rng,
                        std::span<Symbol> inner_flat, std::span<Symbol> outer);

/// Flat-buffer form of to_word.
void wreath_word_into(std::size_t n, std::size_t k, std::span<const Symbol> inner_flat,
                      std::span<const Symbol> outer, std::span<Symbol> word);

/**
 * A centrally symmetric permutation of {−n..−1, 1..n}: the image of j > 0 is
 * signs[j]·underlying(j), and the image of −j is its negation.
 */
class SignedPermutation {
public:
    /// signs entries must be +1 or -1, one per point.
    SignedPermutation(Permutation underlying, std::vector<std::int8_t> signs);

    std::size_t n() const noexcept { return underlying_.degree(); }
    const Permutation& underlying() const noexcept { return underlying_; }
    const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    Permutation underlying_;
    std::vector<std::int8_t> signs_;
};

/// Embedding of S_2 ≀ S_n into B_n: sign_i = +1 iff γ_i is the identity,
/// underlying = η. Throws InvalidArgument unless k == 2.
SignedPermutation to_signed(const WreathElement& w);

/// The length-2n word over {−n..−1,1..n}: position n+j holds
/// sign_{p(j)}·p(j) and position n+1−j holds its negation.
Word signed_word(const SignedPermutation& s);

/// All 2^n·n! signed permutations; underlying in lexicographic order, signs
/// varying fastest with the first point's sign flipping first.
std::vector<SignedPermutation> all_signed(std::size_t n);

/// A permutation whose symbols each carry one of `num_colors` colors.
class ColoredPermutation {
public:
    /// colors.size() must equal perm.degree(); each color in {1..num_colors}.
    ColoredPermutation(Permutation perm, std::vector<std::int32_t> colors, std::int32_t num_colors);

    const Permutation& perm() const noexcept { return perm_; }
    const std::vector<std::int32_t>& colors() const noexcept { return colors_; }
    std::int32_t num_colors() const noexcept { return num_colors_; }

private:
    Permutation perm_;
    std::vector<std::int32_t> colors_;
    std::int32_t num_colors_;
};

/// Uniform permutation with i.i.d. uniform colors (uniform over n!·m^n objects).
ColoredPermutation sample_colored(std::size_t n, std::int32_t num_colors, RandomSource& rng);

}  // namespace wreathlis
