#include "wreathlis/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wreathlis/error.hpp"

namespace wreathlis {

bool is_permutation_word(std::span<const Symbol> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (Symbol v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<Symbol> images) : images_(std::move(images)) {
    if (!is_permutation_word(images_)) {
        throw InvalidArgument("not a permutation of {1.." + std::to_string(images_.size()) +
                              "}: [" + to_string(images_) + "]");
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Symbol> images(degree);
    std::iota(images.begin(), images.end(), Symbol{1});
    return from_trusted(std::move(images));
}

Permutation Permutation::from_trusted(std::vector<Symbol> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j] != static_cast<Symbol>(j + 1)) return false;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw InvalidArgument("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                              std::to_string(b.degree()) + ")");
    }
    std::vector<Symbol> out(a.degree());
    for (std::size_t j = 1; j <= a.degree(); ++j) out[j - 1] = a(static_cast<std::size_t>(b(j)));
    return Permutation::from_trusted(std::move(out));
}

Permutation inverse(const Permutation& p) {
    std::vector<Symbol> out(p.degree());
    for (std::size_t j = 1; j <= p.degree(); ++j) out[p(j) - 1] = static_cast<Symbol>(j);
    return Permutation::from_trusted(std::move(out));
}

void shuffle(std::span<Symbol> values, RandomSource& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

Permutation sample_uniform(std::size_t m, RandomSource& rng) {
    std::vector<Symbol> images(m);
    std::iota(images.begin(), images.end(), Symbol{1});
    shuffle(images, rng);
    return Permutation::from_trusted(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t m) {
    std::vector<Symbol> images(m);
    std::iota(images.begin(), images.end(), Symbol{1});
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_trusted(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::string to_string(std::span<const Symbol> word) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i];
    }
    return os.str();
}

std::string to_string(const Permutation& p) { return to_string(p.images()); }

}  // namespace wreathlis
