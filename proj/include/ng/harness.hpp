#pragma once

#include <cstdint>
#include <string>

#include "ng/config.hpp"
#include "ng/engine.hpp"

namespace ng {

// Experiment harness behind the CLI subcommands. All file output is
// deterministic: rerunning with the same config produces byte-identical
// bodies.

// Executes the config and writes the artifact directory:
//   manifest.txt             exact config + code version (re-runnable as a config)
//   timeseries.csv           cross-run aggregated time series
//   gaps.csv                 final-time neighbour-gap histogram, averaged over runs x agents
//   snapshots/run<k>_t<t>.csv  full lexicon dumps at the snapshot times
// Returns the artifacts for callers that keep processing them.
RunArtifacts cmd_run(const SimConfig& config, const std::string& out_dir, int threads = 1);

// One artifact directory per axis value under out_dir/<axis>_<value>, plus
// summary.csv with the final-time metrics per value.
void cmd_sweep(const SweepSpec& sweep, const std::string& out_dir, int threads = 1);

// Random-draw baseline for the homonymy statistics: distinct-count mean and
// stddev among n uniform words from [1, r] with the closed-form cross-check,
// plus the neighbour-gap histogram. Writes <out_dir>/baseline.csv.
BaselineStats cmd_baseline(std::int32_t n, std::int32_t r, std::int64_t trials,
                           std::uint64_t seed, const std::string& out_dir);

// Helpers shared by the commands and the tests.
void write_artifacts(const RunArtifacts& artifacts, const std::string& out_dir);
std::string timeseries_csv(const RunArtifacts& artifacts);
std::string gaps_csv(const RunArtifacts& artifacts);
std::string snapshot_csv(const LexiconSnapshot& snapshot);
std::string baseline_csv(std::int32_t n, std::int32_t r, std::int64_t trials,
                         std::uint64_t seed, const BaselineStats& stats);

} // namespace ng
