#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ng/dynamics.hpp"
#include "ng/lexicon.hpp"
#include "ng/metrics.hpp"
#include "ng/rng.hpp"

namespace ng {

struct SimConfig {
    ModelParams params;
    std::int64_t total_time = 100;   // time units; one unit = 2n attempts
    std::int64_t measure_every = 1;  // sampling period in time units
    std::vector<std::int64_t> snapshot_at;
    std::int32_t runs = 1;
    std::uint64_t seed = 1;
    bool strict_ranges = true;
};

struct RunCounters {
    std::int64_t reseeds = 0;        // empty-inventory repairs
    std::int64_t noise_firings = 0;
};

struct SimState {
    AgentLexicon agent_a;
    AgentLexicon agent_b;
    std::int64_t clock = 0;          // attempts elapsed
    RunRng rng;
    RunCounters counters;
    DecodeScratch scratch;

    SimState(AgentLexicon a, AgentLexicon b, RunRng r)
        : agent_a(std::move(a)), agent_b(std::move(b)), rng(std::move(r)) {}
};

// Fresh state: every inventory of both agents holds a single uniform random
// word from [1, r] at unit weight; repeats across inventories are allowed.
SimState initialize(const ModelParams& params, RunRng rng);

// Executes 2n communication attempts with the speaker role strictly
// alternating A,B,A,B,... and advances the clock by 2n. Outcomes are
// appended to `outcomes`.
void step_time_unit(SimState& state, const ModelParams& params,
                    std::vector<RoundOutcome>& outcomes);

// One sampled point of a run's time series: the raw window counters of the
// attempts since the previous sample, plus instantaneous lexicon statistics.
// The t = 0 row has empty counters.
struct SeriesRow {
    std::int64_t t = 0;
    MetricsWindow window;
    std::int32_t distinct_top_a = 0;
    std::int32_t distinct_top_b = 0;
};

struct RunResult {
    std::vector<SeriesRow> rows;
    RunCounters counters;
    AgentLexicon final_a;
    AgentLexicon final_b;
};

struct LexiconSnapshot {
    std::int32_t run = 0;
    std::int64_t t = 0;
    AgentLexicon agent_a;
    AgentLexicon agent_b;
};

// Cross-run mean and standard error of one metric at one time point;
// count is the number of runs where the metric was defined.
struct Stat {
    double mean = 0.0;
    double se = 0.0;
    std::int32_t count = 0;
};

struct AggregateRow {
    std::int64_t t = 0;
    Stat success_rate;
    Stat distinct_top_a;
    Stat distinct_top_b;
    Stat rank1_fraction;
    Stat rank2_fraction;
    Stat rank1_success;
    Stat rank2_success;
};

struct RunArtifacts {
    SimConfig config;
    std::vector<RunResult> runs;              // indexed by run
    std::vector<LexiconSnapshot> snapshots;   // ordered by (run, t)
    std::vector<AggregateRow> series;         // cross-run aggregation
};

Stat aggregate(std::span<const std::optional<double>> values);
std::vector<AggregateRow> aggregate_series(const std::vector<RunResult>& runs);

// Executes config.runs independent runs and aggregates them. Run k draws its
// rng seed as run_seed(config.seed, k), so every output is a pure function
// of the config; the thread count only affects wall time. Sampling happens
// every measure_every units; lexicons are copied out at the snapshot_at
// times.
RunArtifacts run(const SimConfig& config, int threads = 1);

} // namespace ng
