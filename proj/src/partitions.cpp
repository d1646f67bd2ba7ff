#include "wreathlis/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "wreathlis/error.hpp"

namespace wreathlis {

CycleType::CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), std::size_t{0}) != parts_.end()) {
        throw InvalidArgument("cycle type: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t CycleType::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::string to_string(const CycleType& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.parts().size(); ++i) os << (i ? "," : "") << c.parts()[i];
    os << ']';
    return os.str();
}

std::vector<std::vector<Symbol>> canonical_cycles(const Permutation& p) {
    std::vector<std::vector<Symbol>> cycles;
    std::vector<bool> seen(p.degree() + 1, false);
    for (std::size_t start = 1; start <= p.degree(); ++start) {
        if (seen[start]) continue;
        std::vector<Symbol> cycle;
        for (auto x = static_cast<Symbol>(start); !seen[static_cast<std::size_t>(x)]; x = p(static_cast<std::size_t>(x))) {
            seen[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        cycles.push_back(std::move(cycle));
    }
    // Found in order of minimum element; a stable sort by length keeps that
    // order within each length.
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return cycles;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<std::size_t> parts;
    for (const auto& c : canonical_cycles(p)) parts.push_back(c.size());
    return CycleType(std::move(parts));
}

std::vector<CycleType> partitions_of(std::size_t n) {
    std::vector<CycleType> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt centralizer_order(const Permutation& s) {
    std::map<std::size_t, std::size_t> multiplicity;
    for (const auto& c : canonical_cycles(s)) ++multiplicity[c.size()];
    BigInt order = 1;
    for (const auto& [length, count] : multiplicity) {
        order *= pow(BigInt(length), static_cast<unsigned>(count)) * factorial(count);
    }
    return order;
}

BigInt class_size(const Permutation& s) { return factorial(s.degree()) / centralizer_order(s); }

Permutation sample_centralizer(const Permutation& s, RandomSource& rng) {
    const auto cycles = canonical_cycles(s);
    std::vector<Symbol> images(s.degree());
    std::size_t group_begin = 0;
    while (group_begin < cycles.size()) {
        const std::size_t length = cycles[group_begin].size();
        std::size_t group_end = group_begin;
        while (group_end < cycles.size() && cycles[group_end].size() == length) ++group_end;

        std::vector<Symbol> targets(group_end - group_begin);
        std::iota(targets.begin(), targets.end(), Symbol{0});
        shuffle(targets, rng);
        for (std::size_t c = group_begin; c < group_end; ++c) {
            const auto& from = cycles[c];
            const auto& to = cycles[group_begin + static_cast<std::size_t>(targets[c - group_begin])];
            const auto rotation = static_cast<std::size_t>(rng.uniform_below(length));
            for (std::size_t x = 0; x < length; ++x) {
                images[static_cast<std::size_t>(from[x] - 1)] = to[(x + rotation) % length];
            }
        }
        group_begin = group_end;
    }
    return Permutation::from_trusted(std::move(images));
}

ChainState chain_step(const ChainState& state, RandomSource& rng) {
    return {sample_centralizer(state.current, rng), state.step_count + 1};
}

PartitionRun run_partition_sampler(std::size_t n, std::uint64_t steps, std::uint64_t burn_in, RandomSource& rng,
                                   const PartitionSamplerOptions& options) {
    if (steps <= burn_in) throw InvalidArgument("partition sampler: steps must exceed burn_in");

    PartitionRun run;
    run.n = n;
    run.steps = steps;
    run.burn_in = burn_in;
    ChainState state{Permutation::identity(n), 0};
    while (state.step_count < steps) {
        ChainState next = chain_step(state, rng);
        if (options.check_commutation) {
            if (compose(state.current, next.current) != compose(next.current, state.current)) {
                throw InvariantViolation("partition sampler: step " + std::to_string(next.step_count) +
                                         " does not commute with its predecessor");
            }
            ++run.commute_checks;
        }
        state = std::move(next);
        if (state.step_count > burn_in) {
            const auto type = cycle_type(state.current);
            ++run.frequencies[type];
            ++run.reported;
            if (options.sink) options.sink(type);
        }
    }
    return run;
}

double tv_to_uniform(const PartitionRun& run) {
    const auto all = partitions_of(run.n);
    const double uniform = 1.0 / static_cast<double>(all.size());
    double tv = 0.0;
    for (const auto& p : all) {
        auto it = run.frequencies.find(p);
        const double freq =
            it == run.frequencies.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(run.reported);
        tv += std::abs(freq - uniform);
    }
    return 0.5 * tv;
}

}  // namespace wreathlis
