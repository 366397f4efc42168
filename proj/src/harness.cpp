#include "ng/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ng/version.hpp"

namespace ng {

namespace {

namespace fs = std::filesystem;

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Two cells, "mean,se"; both empty when the metric was undefined everywhere.
std::string stat_cells(const Stat& s) {
    if (s.count == 0) return ",";
    return fmt6(s.mean) + "," + fmt6(s.se);
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << body;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void append_row(std::ostringstream& out, const AggregateRow& row) {
    out << row.t << ',' << stat_cells(row.success_rate) << ','
        << stat_cells(row.distinct_top_a) << ',' << stat_cells(row.distinct_top_b) << ','
        << stat_cells(row.rank1_fraction) << ',' << stat_cells(row.rank2_fraction) << ','
        << stat_cells(row.rank1_success) << ',' << stat_cells(row.rank2_success) << '\n';
}

constexpr const char* kSeriesHeader =
    "success_rate,success_rate_se,"
    "distinct_top_a,distinct_top_a_se,distinct_top_b,distinct_top_b_se,"
    "rank1_fraction,rank1_fraction_se,rank2_fraction,rank2_fraction_se,"
    "rank1_success,rank1_success_se,rank2_success,rank2_success_se";

} // namespace

std::string timeseries_csv(const RunArtifacts& artifacts) {
    std::ostringstream out;
    out << "t," << kSeriesHeader << '\n';
    for (const AggregateRow& row : artifacts.series) append_row(out, row);
    return out.str();
}

std::string gaps_csv(const RunArtifacts& artifacts) {
    GapAccumulator acc;
    for (const RunResult& run : artifacts.runs) {
        acc.add(gap_distribution(run.final_a));
        acc.add(gap_distribution(run.final_b));
    }
    std::ostringstream out;
    out << "d,n_d\n";
    for (const auto& [d, count] : acc.mean().counts) out << d << ',' << fmt6(count) << '\n';
    return out.str();
}

std::string snapshot_csv(const LexiconSnapshot& snapshot) {
    std::ostringstream out;
    out << "agent,object,word,weight\n";
    const AgentLexicon* agents[2] = {&snapshot.agent_a, &snapshot.agent_b};
    for (int agent = 0; agent < 2; ++agent) {
        const AgentLexicon& lex = *agents[agent];
        for (std::int32_t k = 0; k < lex.object_count(); ++k) {
            const Inventory& inv = lex.inventory(k);
            std::vector<LexEntry> entries;
            for (std::int32_t i = 0; i < inv.size(); ++i) entries.push_back(inv.entry(i));
            std::sort(entries.begin(), entries.end(), entry_precedes);
            for (const LexEntry& e : entries)
                out << (agent == 0 ? 'A' : 'B') << ',' << k << ',' << e.word << ','
                    << e.weight << '\n';
        }
    }
    return out.str();
}

void write_artifacts(const RunArtifacts& artifacts, const std::string& out_dir) {
    const fs::path root(out_dir);
    fs::create_directories(root);
    write_file(root / "manifest.txt", config_to_kv(artifacts.config));
    write_file(root / "timeseries.csv", timeseries_csv(artifacts));
    write_file(root / "gaps.csv", gaps_csv(artifacts));
    if (!artifacts.snapshots.empty()) {
        fs::create_directories(root / "snapshots");
        for (const LexiconSnapshot& snap : artifacts.snapshots) {
            const std::string name =
                "run" + std::to_string(snap.run) + "_t" + std::to_string(snap.t) + ".csv";
            write_file(root / "snapshots" / name, snapshot_csv(snap));
        }
    }
}

RunArtifacts cmd_run(const SimConfig& config, const std::string& out_dir, int threads) {
    RunArtifacts artifacts = run(config, threads);
    write_artifacts(artifacts, out_dir);
    return artifacts;
}

void cmd_sweep(const SweepSpec& sweep, const std::string& out_dir, int threads) {
    const fs::path root(out_dir);
    fs::create_directories(root);
    std::ostringstream summary;
    summary << sweep.axis << ",t," << kSeriesHeader << '\n';
    for (const std::string& token : sweep.values) {
        const SimConfig config = apply_axis_value(sweep.base, sweep.axis, token);
        const std::string sub = sweep.axis + "_" + token;
        RunArtifacts artifacts = cmd_run(config, (root / sub).string(), threads);
        if (artifacts.series.empty()) throw std::runtime_error("sweep produced no series rows");
        const AggregateRow& last = artifacts.series.back();
        summary << token << ',' << last.t << ',' << stat_cells(last.success_rate) << ','
                << stat_cells(last.distinct_top_a) << ',' << stat_cells(last.distinct_top_b) << ','
                << stat_cells(last.rank1_fraction) << ',' << stat_cells(last.rank2_fraction) << ','
                << stat_cells(last.rank1_success) << ',' << stat_cells(last.rank2_success) << '\n';
    }
    write_file(root / "summary.csv", summary.str());
}

std::string baseline_csv(std::int32_t n, std::int32_t r, std::int64_t trials,
                         std::uint64_t seed, const BaselineStats& stats) {
    std::ostringstream out;
    out << "key,value\n";
    out << "n," << n << '\n';
    out << "r," << r << '\n';
    out << "trials," << trials << '\n';
    out << "seed," << seed << '\n';
    out << "distinct_mean," << fmt6(stats.distinct_mean) << '\n';
    out << "distinct_stddev," << fmt6(stats.distinct_stddev) << '\n';
    out << "distinct_closed_form," << fmt6(closed_form_distinct(n, r)) << '\n';
    for (const auto& [d, count] : stats.gaps.counts)
        out << "gap_" << d << ',' << fmt6(count) << '\n';
    return out.str();
}

BaselineStats cmd_baseline(std::int32_t n, std::int32_t r, std::int64_t trials,
                           std::uint64_t seed, const std::string& out_dir) {
    if (n < 1 || r < 1) throw ConfigError("baseline requires n >= 1 and r >= 1");
    if (trials < 1) throw ConfigError("baseline requires trials >= 1");
    RunRng rng(seed);
    const BaselineStats stats = random_baseline(n, r, trials, rng);
    const fs::path root(out_dir);
    fs::create_directories(root);
    write_file(root / "baseline.csv", baseline_csv(n, r, trials, seed, stats));
    return stats;
}

} // namespace ng
