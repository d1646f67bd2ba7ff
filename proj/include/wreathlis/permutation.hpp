#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wreathlis/random.hpp"

namespace wreathlis {

using Symbol = std::int32_t;
using Word = std::vector<Symbol>;

/**
 * A permutation of {1..m} in one-line notation: entry j (1-based) is the
 * image of j. Degree 0 is the empty identity of S_0.
 *
 * Values are immutable after construction and validated on the way in.
 */
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidArgument unless images is a permutation of {1..m}.
    explicit Permutation(std::vector<Symbol> images);
    Permutation(std::initializer_list<Symbol> images)
        : Permutation(std::vector<Symbol>(images)) {}

    static Permutation identity(std::size_t degree);

    /// Skips validation; the caller guarantees images is a permutation.
    static Permutation from_trusted(std::vector<Symbol> images) noexcept;

    std::size_t degree() const noexcept { return images_.size(); }

    /// Image of the 1-based point j.
    Symbol operator()(std::size_t j) const { return images_[j - 1]; }

    std::span<const Symbol> images() const noexcept { return images_; }

    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Symbol> images_;
};

/// True iff values is a permutation of {1..values.size()}.
bool is_permutation_word(std::span<const Symbol> values);

/// (a ∘ b)(j) = a(b(j)). Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// Uniform element of S_m by Fisher-Yates with unbiased bounded draws.
Permutation sample_uniform(std::size_t m, RandomSource& rng);

/// In-place Fisher-Yates over an existing buffer.
void shuffle(std::span<Symbol> values, RandomSource& rng);

/// All m! permutations of degree m in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t m);

/// Space-separated one-line rendering, e.g. "2 3 1".
std::string to_string(const Permutation& p);
std::string to_string(std::span<const Symbol> word);

}  // namespace wreathlis
