#include "ng/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ng {

SimState initialize(const ModelParams& params, RunRng rng) {
    SimState state(AgentLexicon(params.n, params.l), AgentLexicon(params.n, params.l),
                   std::move(rng));
    for (std::int32_t k = 0; k < params.n; ++k) state.agent_a.inventory(k).reseed(state.rng.word(params.r));
    for (std::int32_t k = 0; k < params.n; ++k) state.agent_b.inventory(k).reseed(state.rng.word(params.r));
    return state;
}

void step_time_unit(SimState& state, const ModelParams& params,
                    std::vector<RoundOutcome>& outcomes) {
    const std::int64_t attempts = 2 * static_cast<std::int64_t>(params.n);
    for (std::int64_t j = 0; j < attempts; ++j) {
        const bool a_speaks = (j % 2) == 0;
        AgentLexicon& speaker = a_speaks ? state.agent_a : state.agent_b;
        AgentLexicon& hearer = a_speaks ? state.agent_b : state.agent_a;
        RoundOutcome outcome = communication_round(speaker, hearer, params, state.rng, state.scratch);
        outcome.speaker = a_speaks ? 0 : 1;
        if (outcome.noise_fired) ++state.counters.noise_firings;
        if (outcome.speaker_reseeded) ++state.counters.reseeds;
        outcomes.push_back(outcome);
    }
    state.clock += attempts;
}

Stat aggregate(std::span<const std::optional<double>> values) {
    Stat stat;
    double sum = 0.0;
    for (const auto& v : values) {
        if (!v) continue;
        ++stat.count;
        sum += *v;
    }
    if (stat.count == 0) return stat;
    stat.mean = sum / stat.count;
    if (stat.count >= 2) {
        double ss = 0.0;
        for (const auto& v : values) {
            if (!v) continue;
            ss += (*v - stat.mean) * (*v - stat.mean);
        }
        stat.se = std::sqrt(ss / (stat.count - 1)) / std::sqrt(static_cast<double>(stat.count));
    }
    return stat;
}

std::vector<AggregateRow> aggregate_series(const std::vector<RunResult>& runs) {
    std::vector<AggregateRow> out;
    if (runs.empty()) return out;
    const std::size_t rows = runs[0].rows.size();
    for (const RunResult& run : runs)
        if (run.rows.size() != rows)
            throw std::logic_error("aggregate_series: ragged run series");

    std::vector<std::optional<double>> column(runs.size());
    auto collect = [&](std::size_t i, auto metric) {
        for (std::size_t k = 0; k < runs.size(); ++k) column[k] = metric(runs[k].rows[i]);
        return aggregate(column);
    };

    out.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        AggregateRow row;
        row.t = runs[0].rows[i].t;
        row.success_rate = collect(i, [](const SeriesRow& r) { return r.window.success_rate(); });
        row.distinct_top_a = collect(i, [](const SeriesRow& r) {
            return std::optional<double>(r.distinct_top_a);
        });
        row.distinct_top_b = collect(i, [](const SeriesRow& r) {
            return std::optional<double>(r.distinct_top_b);
        });
        row.rank1_fraction = collect(i, [](const SeriesRow& r) { return r.window.rank_fraction(1); });
        row.rank2_fraction = collect(i, [](const SeriesRow& r) { return r.window.rank_fraction(2); });
        row.rank1_success = collect(i, [](const SeriesRow& r) { return r.window.success_rate_by_rank(1); });
        row.rank2_success = collect(i, [](const SeriesRow& r) { return r.window.success_rate_by_rank(2); });
        out.push_back(row);
    }
    return out;
}

namespace {

struct SingleRunOutput {
    std::optional<RunResult> result;
    std::vector<LexiconSnapshot> snapshots;
};

SingleRunOutput execute_run(const SimConfig& config, std::int32_t run_index) {
    const ModelParams& params = config.params;
    SingleRunOutput out;
    SimState state = initialize(params, RunRng(run_seed(config.seed, run_index)));

    std::vector<SeriesRow> rows;
    rows.reserve(static_cast<std::size_t>(config.total_time / config.measure_every) + 1);

    MetricsWindow window;
    auto sample = [&](std::int64_t t) {
        SeriesRow row;
        row.t = t;
        row.window = window;
        row.distinct_top_a = distinct_top_words(state.agent_a);
        row.distinct_top_b = distinct_top_words(state.agent_b);
        rows.push_back(row);
        window.reset();
    };
    auto snapshot_due = [&](std::int64_t t) {
        return std::find(config.snapshot_at.begin(), config.snapshot_at.end(), t) !=
               config.snapshot_at.end();
    };
    auto take_snapshot = [&](std::int64_t t) {
        out.snapshots.push_back({run_index, t, state.agent_a, state.agent_b});
    };

    sample(0);
    if (snapshot_due(0)) take_snapshot(0);

    std::vector<RoundOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(2 * params.n));
    for (std::int64_t t = 1; t <= config.total_time; ++t) {
        outcomes.clear();
        step_time_unit(state, params, outcomes);
        for (const RoundOutcome& o : outcomes) window.add(o);
        if (t % config.measure_every == 0) sample(t);
        if (snapshot_due(t)) take_snapshot(t);
    }

    out.result.emplace(RunResult{std::move(rows), state.counters,
                                 std::move(state.agent_a), std::move(state.agent_b)});
    return out;
}

} // namespace

RunArtifacts run(const SimConfig& config, int threads) {
    validate_params(config.params, config.strict_ranges);
    if (config.total_time < 0) throw ParamError("total_time must be >= 0");
    if (config.measure_every < 1) throw ParamError("measure_every must be >= 1");
    if (config.runs < 1) throw ParamError("runs must be >= 1");
    for (const std::int64_t t : config.snapshot_at)
        if (t < 0 || t > config.total_time)
            throw ParamError("snapshot_at time " + std::to_string(t) + " outside [0, total_time]");

    std::vector<SingleRunOutput> outputs(static_cast<std::size_t>(config.runs));
    const int workers = std::max(1, std::min<int>(threads, config.runs));
    if (workers == 1) {
        for (std::int32_t k = 0; k < config.runs; ++k) outputs[k] = execute_run(config, k);
    } else {
        std::atomic<std::int32_t> next{0};
        auto work = [&]() {
            for (;;) {
                const std::int32_t k = next.fetch_add(1);
                if (k >= config.runs) return;
                outputs[k] = execute_run(config, k);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    RunArtifacts artifacts{config, {}, {}, {}};
    artifacts.runs.reserve(outputs.size());
    for (auto& o : outputs) {
        artifacts.runs.push_back(std::move(*o.result));
        for (auto& snap : o.snapshots) artifacts.snapshots.push_back(std::move(snap));
    }
    artifacts.series = aggregate_series(artifacts.runs);
    return artifacts;
}

} // namespace ng
