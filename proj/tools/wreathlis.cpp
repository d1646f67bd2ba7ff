// Command-line front end: sampling, exact tables, Monte Carlo scans, tail
// checks and the partition chain. Exit codes: 0 ok, 2 usage, 3 cap exceeded,
// 4 invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wreathlis/decomp.hpp"
#include "wreathlis/error.hpp"
#include "wreathlis/exact.hpp"
#include "wreathlis/montecarlo.hpp"
#include "wreathlis/partitions.hpp"
#include "wreathlis/report.hpp"
#include "wreathlis/wreath.hpp"

namespace {

using namespace wreathlis;

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

struct Options {
    std::size_t n = 1;
    std::size_t k = 1;
    std::string grid;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format;
    std::string out;
    std::optional<std::uint64_t> cap;
    std::uint64_t burn_in = 1000;
    std::uint64_t steps = 100000;
    std::string u_grid = "0,1,2,4,8,16";
    std::string fixture;
    std::vector<std::size_t> wreath;
    std::optional<std::size_t> signed_n;
    std::optional<std::size_t> sym_m;
    std::string stat = "L";
    bool moments = false;
    bool check = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) parts.push_back(item);
    return parts;
}

std::uint64_t parse_positive(const std::string& token, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("malformed ") + what + " entry '" + token + "'");
    }
    if (used != token.size() || v == 0) throw InvalidArgument(std::string("malformed ") + what + " entry '" + token + "'");
    return v;
}

/// "16,64,256" (n = k) or "100x20,50x50".
std::vector<std::pair<std::size_t, std::size_t>> parse_cell_grid(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& token : split(text, ',')) {
        const auto x = token.find('x');
        if (x == std::string::npos) {
            const auto v = parse_positive(token, "grid");
            cells.emplace_back(v, v);
        } else {
            cells.emplace_back(parse_positive(token.substr(0, x), "grid"), parse_positive(token.substr(x + 1), "grid"));
        }
    }
    if (cells.empty()) throw InvalidArgument("grid must not be empty");
    return cells;
}

std::vector<std::size_t> parse_size_grid(const std::string& text) {
    std::vector<std::size_t> values;
    for (const auto& token : split(text, ',')) values.push_back(parse_positive(token, "grid"));
    if (values.empty()) throw InvalidArgument("grid must not be empty");
    return values;
}

std::vector<double> parse_u_grid(const std::string& text) {
    std::vector<double> values;
    for (const auto& token : split(text, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("malformed --u-grid entry '" + token + "'");
        }
        if (used != token.size() || !(v >= 0.0)) throw InvalidArgument("malformed --u-grid entry '" + token + "'");
        values.push_back(v);
    }
    if (values.empty()) throw InvalidArgument("--u-grid must not be empty");
    return values;
}

EnumerationCaps caps_from(const Options& o) {
    EnumerationCaps caps;
    if (o.cap) {
        caps.max_elements = *o.cap;
        std::size_t m = 0;
        std::uint64_t fact = 1;
        while (fact * (m + 1) <= *o.cap) fact *= ++m;
        caps.max_sym_degree = m;
    }
    return caps;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open --out path '" + o.out + "'");
    file << text;
}

WreathElement demo_fixture() {
    // ((1 2), (1)(2), (1 2); (3 1 2)) with the cycle (3 1 2) read as 3→1, 1→2, 2→3.
    return WreathElement(2, 3, {Permutation{2, 1}, Permutation{1, 2}, Permutation{2, 1}}, Permutation{2, 3, 1});
}

std::string cmd_sample(const Options& o) {
    WreathElement w = WreathElement::identity(1, 1);
    nlohmann::json config;
    std::optional<std::uint64_t> seed;
    if (!o.fixture.empty()) {
        if (o.fixture != "demo") throw InvalidArgument("unknown --fixture '" + o.fixture + "' (known: demo)");
        w = demo_fixture();
        config = {{"fixture", o.fixture}};
    } else {
        if (o.n == 0 || o.k == 0) throw InvalidArgument("--n and --k must be positive");
        RandomSource rng(o.seed, 0);
        w = sample_wreath(o.n, o.k, rng);
        seed = o.seed;
        config = {{"n", o.n}, {"k", o.k}};
    }
    const auto meta = metadata("sample", seed, config);
    if (o.format == "json") return metadata_json_line(meta) + json_line(sample_json(w));
    if (!o.format.empty() && o.format != "text") throw InvalidArgument("sample: --format must be text or json");
    return "# " + meta.dump() + "\n" + sample_text(w);
}

std::string cmd_run(const Options& o) {
    TrialPlan plan;
    plan.n = o.n;
    plan.k = o.k;
    plan.trials = o.trials;
    plan.master_seed = o.seed;
    plan.threads = o.threads;
    const auto run = run_trials(plan);
    const auto meta = metadata("run", o.seed, {{"n", o.n}, {"k", o.k}, {"trials", o.trials}});

    if (o.format == "csv") {
        ScanRow row;
        row.n = o.n;
        row.k = o.k;
        row.trials = o.trials;
        row.seed = o.seed;
        row.L = *run.L;
        row.ratio = *run.ratio;
        row.mean_W = run.W->mean;
        return metadata_csv_line(meta) + scan_csv(std::span(&row, 1));
    }
    std::string text = metadata_json_line(meta);
    for (const auto& r : run.records) text += json_line(record_to_json(r, o.n, o.k));
    text += json_line({{"summary",
                        {{"L", to_json(*run.L)},
                         {"W", to_json(*run.W)},
                         {"N", to_json(*run.N)},
                         {"ratio", to_json(*run.ratio)},
                         {"histogram_L", to_json(histogram(run.records, WreathStatistic::L))}}}});
    return text;
}

std::string cmd_exact(const Options& o) {
    const auto caps = caps_from(o);
    const int selected = (o.wreath.empty() ? 0 : 1) + (o.signed_n ? 1 : 0) + (o.sym_m ? 1 : 0);
    if (selected != 1) throw InvalidArgument("exact: give exactly one of --wreath N K, --signed N, --sym M");

    DistributionTable table;
    nlohmann::json config;
    std::optional<MomentReport> moments;
    if (!o.wreath.empty()) {
        WreathStatistic stat = WreathStatistic::L;
        if (o.stat == "W") {
            stat = WreathStatistic::W;
        } else if (o.stat == "N") {
            stat = WreathStatistic::N;
        } else if (o.stat != "L") {
            throw InvalidArgument("exact: --stat must be L, W or N");
        }
        const std::size_t n = o.wreath[0], k = o.wreath[1];
        table = enumerate_wreath(n, k, stat, caps, o.threads);
        config = {{"action", "wreath"}, {"n", n}, {"k", k}, {"stat", o.stat}};
        if (o.moments) moments = verify_moment_identities(n, k, caps, o.threads);
    } else if (o.signed_n) {
        table = enumerate_signed(*o.signed_n, caps);
        config = {{"action", "signed"}, {"n", *o.signed_n}, {"stat", "L"}};
    } else {
        table = enumerate_sym_lis(*o.sym_m, caps);
        config = {{"action", "sym"}, {"m", *o.sym_m}, {"stat", "L"}};
    }
    config["cap"] = caps.max_elements;
    const auto meta = metadata("exact", std::nullopt, config);

    if (o.format == "csv") return metadata_csv_line(meta) + distribution_csv(table);
    nlohmann::json body = to_json(table);
    if (o.sym_m) {
        body["f"] = to_json(table.mean);
        body["g"] = to_json(table.variance);
    }
    if (moments) body["moments"] = to_json(*moments);
    return metadata_json_line(meta) + json_line(body);
}

std::string cmd_scan(const Options& o) {
    const auto grid = parse_cell_grid(o.grid);
    const auto rows = ratio_scan(grid, o.trials, o.seed, o.threads);
    const auto meta = metadata("scan", o.seed, {{"grid", o.grid}, {"trials", o.trials}});
    if (o.format == "json") {
        std::string text = metadata_json_line(meta);
        for (const auto& r : rows) text += json_line(to_json(r));
        return text;
    }
    return metadata_csv_line(meta) + scan_csv(rows);
}

std::string cmd_tail(const Options& o) {
    const auto u = parse_u_grid(o.u_grid);
    const auto caps = caps_from(o);
    const auto report = tail_check(o.k, o.trials, u, o.seed, caps, o.threads);
    const auto meta = metadata("tail", o.seed, {{"k", o.k}, {"trials", o.trials}, {"u_grid", o.u_grid}});
    if (o.format == "csv") return metadata_csv_line(meta) + tail_csv(report);
    return metadata_json_line(meta) + json_line(to_json(report));
}

std::string cmd_conjecture(const Options& o) {
    const auto grid = parse_size_grid(o.grid);
    const auto rows = conjecture_scan(grid, o.trials, o.seed, o.threads);
    const auto meta = metadata("conjecture", o.seed, {{"grid", o.grid}, {"trials", o.trials}, {"k", 2}});
    if (o.format == "json") {
        std::string text = metadata_json_line(meta);
        for (const auto& r : rows) text += json_line(to_json(r));
        return text;
    }
    return metadata_csv_line(meta) + conjecture_csv(rows);
}

std::string cmd_partitions(const Options& o) {
    if (o.n == 0) throw InvalidArgument("--n must be positive");
    RandomSource rng(o.seed, 0);
    const auto meta = metadata("partitions", o.seed,
                               {{"n", o.n}, {"steps", o.steps}, {"burn_in", o.burn_in}, {"check", o.check}});
    PartitionSamplerOptions options;
    options.check_commutation = o.check;
    std::string stream;
    if (o.format == "json") {
        stream = metadata_json_line(meta);
        options.sink = [&](const CycleType& c) { stream += json_line(partition_json(c)); };
    }
    const auto run = run_partition_sampler(o.n, o.steps, o.burn_in, rng, options);
    if (o.format == "json") {
        stream += json_line({{"summary", {{"reported", run.reported}, {"tv_to_uniform", tv_to_uniform(run)}}}});
        return stream;
    }
    return metadata_csv_line(meta) + partition_csv(run);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wreathlis: longest increasing subsequences in wreath products S_k wr S_n"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Worker threads (output does not depend on it)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    };

    auto* sample = app.add_subcommand("sample", "Draw one element; print its word, L and block decomposition");
    sample->add_option("--n", o.n, "Number of blocks");
    sample->add_option("--k", o.k, "Block size");
    sample->add_option("--seed", o.seed, "Master seed (default 0)");
    sample->add_option("--fixture", o.fixture, "Print a pinned element instead of sampling (demo)");
    sample->add_option("--format", o.format, "text (default) or json");
    add_common(sample);

    auto* run = app.add_subcommand("run", "Trial records as JSON lines (trial,n,k,L,W,N) plus a summary line");
    run->add_option("--n", o.n, "Number of blocks")->required()->check(CLI::PositiveNumber);
    run->add_option("--k", o.k, "Block size")->required()->check(CLI::PositiveNumber);
    run->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    run->add_option("--seed", o.seed, "Master seed")->required();
    run->add_option("--format", o.format, "json (default) or csv (one summary row)");
    add_common(run);

    auto* exact = app.add_subcommand("exact", "Exact distributions by exhaustive enumeration");
    exact->add_option("--wreath", o.wreath, "N K: S_K wr S_N under the block action")->expected(2);
    exact->add_option("--signed", o.signed_n, "N: signed permutations B_N");
    exact->add_option("--sym", o.sym_m, "M: LIS over S_M (reports f and g)");
    exact->add_option("--stat", o.stat, "L (default), W or N; wreath only");
    exact->add_flag("--moments", o.moments, "Also certify the exact mean/variance identities for W");
    exact->add_option("--cap", o.cap, "Maximum number of group elements to enumerate (default 1000000)");
    exact->add_option("--format", o.format, "json (default) or csv");
    add_common(exact);

    auto* scan = app.add_subcommand(
        "scan", "Summary of L/(4 sqrt(nk)) per grid cell.\nCSV columns: n,k,trials,mean_L,se_L,var_L,median_L,mean_ratio,mean_W");
    scan->add_option("--grid", o.grid, "Cells: '16,64,256' (n = k) or '100x20,50x50'")->required();
    scan->add_option("--trials", o.trials, "Trials per cell")->check(CLI::PositiveNumber);
    scan->add_option("--seed", o.seed, "Master seed")->required();
    scan->add_option("--format", o.format, "csv (default) or json");
    add_common(scan);

    auto* tail = app.add_subcommand(
        "tail", "Empirical upper tails of L_k against 2exp(-u^2/(4(h+u))).\nCSV columns: u,empirical_tail,bound,binomial_se,mc_error");
    tail->add_option("--k", o.k, "Permutation size (>= 2)")->required();
    tail->add_option("--trials", o.trials, "Number of samples")->check(CLI::PositiveNumber);
    tail->add_option("--u-grid", o.u_grid, "Comma-separated u values");
    tail->add_option("--seed", o.seed, "Master seed")->required();
    tail->add_option("--cap", o.cap, "Enumeration cap deciding when f, g are exact");
    tail->add_option("--format", o.format, "json (default) or csv");
    add_common(tail);

    auto* conj = app.add_subcommand(
        "conjecture",
        "k = 2 scan of L/sqrt(n) and W/sqrt(n).\nCSV columns: n,trials,mean_L_over_sqrt_n,se_L_over_sqrt_n,mean_W_over_sqrt_n,se_W_over_sqrt_n");
    conj->add_option("--grid", o.grid, "Comma-separated n values")->required();
    conj->add_option("--trials", o.trials, "Trials per n")->check(CLI::PositiveNumber);
    conj->add_option("--seed", o.seed, "Master seed")->required();
    conj->add_option("--format", o.format, "csv (default) or json");
    add_common(conj);

    auto* parts = app.add_subcommand(
        "partitions", "Commuting-graph chain on S_n reporting cycle types.\nCSV columns: partition,count,frequency");
    parts->add_option("--n", o.n, "Degree")->required();
    parts->add_option("--steps", o.steps, "Total chain steps, burn-in included");
    parts->add_option("--burn-in", o.burn_in, "Steps discarded before reporting (default 1000)");
    parts->add_option("--seed", o.seed, "Master seed")->required();
    parts->add_flag("--check", o.check, "Verify every step commutes with its predecessor");
    parts->add_option("--format", o.format, "csv (default) or json (one partition per line)");
    add_common(parts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::string text;
        if (*sample) {
            text = cmd_sample(o);
        } else if (*run) {
            text = cmd_run(o);
        } else if (*exact) {
            text = cmd_exact(o);
        } else if (*scan) {
            text = cmd_scan(o);
        } else if (*tail) {
            text = cmd_tail(o);
        } else if (*conj) {
            text = cmd_conjecture(o);
        } else {
            text = cmd_partitions(o);
        }
        emit(o, text);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
