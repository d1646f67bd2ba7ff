#include "wreathlis/report.hpp"

#include <cstdio>
#include <sstream>

#include "wreathlis/lis.hpp"

namespace wreathlis {

nlohmann::json metadata(const std::string& command, std::optional<std::uint64_t> seed, nlohmann::json config) {
    nlohmann::json meta = {{"version", kVersion}, {"command", command}, {"config", std::move(config)}};
    meta["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return meta;
}

std::string metadata_json_line(const nlohmann::json& meta) { return json_line({{"meta", meta}}); }

std::string metadata_csv_line(const nlohmann::json& meta) { return "# " + meta.dump() + "\n"; }

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string scan_csv(std::span<const ScanRow> rows) {
    std::ostringstream os;
    os << "n,k,trials,mean_L,se_L,var_L,median_L,mean_ratio,mean_W\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.k << ',' << r.trials << ',' << format_number(r.L.mean) << ',' << format_number(r.L.se)
           << ',' << format_number(r.L.variance) << ',' << format_number(r.L.lower_median) << ','
           << format_number(r.ratio.mean) << ',' << format_number(r.mean_W) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const ScanRow& row) {
    return {{"n", row.n},           {"k", row.k},         {"trials", row.trials},
            {"seed", row.seed},     {"L", to_json(row.L)}, {"ratio", to_json(row.ratio)},
            {"W_ratio", to_json(row.W_ratio)}, {"mean_W", row.mean_W}};
}

std::string conjecture_csv(std::span<const ConjectureRow> rows) {
    std::ostringstream os;
    os << "n,trials,mean_L_over_sqrt_n,se_L_over_sqrt_n,mean_W_over_sqrt_n,se_W_over_sqrt_n\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.trials << ',' << format_number(r.L_scaled.mean) << ',' << format_number(r.L_scaled.se)
           << ',' << format_number(r.W_scaled.mean) << ',' << format_number(r.W_scaled.se) << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const ConjectureRow& row) {
    return {{"n", row.n},
            {"trials", row.trials},
            {"seed", row.seed},
            {"L_over_sqrt_n", to_json(row.L_scaled)},
            {"W_over_sqrt_n", to_json(row.W_scaled)}};
}

std::string distribution_csv(const DistributionTable& table) {
    std::ostringstream os;
    os << "value,count,probability\n";
    for (std::size_t i = 0; i < table.support.size(); ++i) {
        os << table.support[i] << ',' << table.counts[i] << ','
           << format_number(static_cast<double>(table.counts[i]) / static_cast<double>(table.total)) << '\n';
    }
    return os.str();
}

std::string tail_csv(const TailReport& r) {
    std::ostringstream os;
    os << "u,empirical_tail,bound,binomial_se,mc_error\n";
    for (std::size_t i = 0; i < r.u_grid.size(); ++i) {
        os << format_number(r.u_grid[i]) << ',' << format_number(r.empirical_tail[i]) << ','
           << format_number(r.bound[i]) << ',' << format_number(r.binomial_se[i]) << ','
           << format_number(r.mc_error[i]) << '\n';
    }
    return os.str();
}

nlohmann::json partition_json(const CycleType& c) { return c.parts(); }

std::string partition_csv(const PartitionRun& run) {
    constexpr std::size_t kListAllUpTo = 30;
    std::map<CycleType, std::uint64_t> rows = run.frequencies;
    if (run.n <= kListAllUpTo) {
        for (const auto& p : partitions_of(run.n)) rows.try_emplace(p, 0);
    }
    std::ostringstream os;
    os << "partition,count,frequency\n";
    // Descending order: [n] first.
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        os << '"' << partition_json(it->first).dump() << "\"," << it->second << ','
           << format_number(static_cast<double>(it->second) / static_cast<double>(run.reported)) << '\n';
    }
    return os.str();
}

std::string sample_text(const WreathElement& w) {
    const Word word = to_word(w);
    const auto d = decompose(w);
    auto join = [](const std::vector<std::size_t>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        return os.str();
    };
    std::ostringstream os;
    os << "n: " << w.n() << "\nk: " << w.k() << "\ninner:";
    for (const auto& g : w.inner()) os << " [" << to_string(g) << ']';
    os << "\nouter: [" << to_string(w.outer()) << "]\n";
    os << "word: " << to_string(word) << '\n';
    os << "L: " << lis_fast(word).length << '\n';
    os << "block_word: " << to_string(d.block_word) << '\n';
    os << "N: " << d.N << '\n';
    os << "chosen_blocks: " << join(d.chosen_blocks) << '\n';
    os << "per_block_lis: " << join(d.per_block_lis) << '\n';
    os << "W: " << d.W << '\n';
    return os.str();
}

nlohmann::json sample_json(const WreathElement& w) {
    const Word word = to_word(w);
    const auto d = decompose(w);
    nlohmann::json inner = nlohmann::json::array();
    for (const auto& g : w.inner()) inner.push_back(std::vector<Symbol>(g.images().begin(), g.images().end()));
    return {{"n", w.n()},
            {"k", w.k()},
            {"inner", inner},
            {"outer", std::vector<Symbol>(w.outer().images().begin(), w.outer().images().end())},
            {"word", word},
            {"L", lis_fast(word).length},
            {"block_word", std::vector<Symbol>(d.block_word.images().begin(), d.block_word.images().end())},
            {"N", d.N},
            {"chosen_blocks", d.chosen_blocks},
            {"per_block_lis", d.per_block_lis},
            {"W", d.W}};
}

}  // namespace wreathlis
