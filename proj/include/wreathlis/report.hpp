#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <json.hpp>

#include "wreathlis/decomp.hpp"
#include "wreathlis/exact.hpp"
#include "wreathlis/montecarlo.hpp"
#include "wreathlis/partitions.hpp"
#include "wreathlis/wreath.hpp"

namespace wreathlis {

inline constexpr const char* kVersion = "0.1.0";

/// {"version", "command", "seed", "config"}; seed is null when not applicable.
nlohmann::json metadata(const std::string& command, std::optional<std::uint64_t> seed, nlohmann::json config);

/// First line of a JSON-lines stream: {"meta": {...}}.
std::string metadata_json_line(const nlohmann::json& meta);
/// First line of a CSV table: "# " followed by the metadata JSON.
std::string metadata_csv_line(const nlohmann::json& meta);

/// Compact JSON plus newline.
std::string json_line(const nlohmann::json& j);

/// Columns: n,k,trials,mean_L,se_L,var_L,median_L,mean_ratio,mean_W
std::string scan_csv(std::span<const ScanRow> rows);
nlohmann::json to_json(const ScanRow& row);

/// Columns: n,trials,mean_L_over_sqrt_n,se_L_over_sqrt_n,mean_W_over_sqrt_n,se_W_over_sqrt_n
std::string conjecture_csv(std::span<const ConjectureRow> rows);
nlohmann::json to_json(const ConjectureRow& row);

/// Columns: value,count,probability
std::string distribution_csv(const DistributionTable& table);

/// Columns: u,empirical_tail,bound,binomial_se,mc_error
std::string tail_csv(const TailReport& r);

/// Columns: partition,count,frequency. All partitions of n are listed
/// (zero counts included) while p(n) stays small; otherwise observed ones.
std::string partition_csv(const PartitionRun& run);

nlohmann::json partition_json(const CycleType& c);

/// Element, word, L and block decomposition.
std::string sample_text(const WreathElement& w);
nlohmann::json sample_json(const WreathElement& w);

/// Locale-independent "%.10g".
std::string format_number(double x);

}  // namespace wreathlis
