#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ng/harness.hpp"
#include "ng/kernels/similarity.hpp"
#include "ng/version.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    int threads = 1;
    std::uint64_t seed = 0;
    std::int32_t runs = 0;
    std::vector<std::int64_t> snapshot_at;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* runs_opt = nullptr;
    CLI::Option* snapshot_opt = nullptr;
    CLI::Option* strict_opt = nullptr;
    CLI::Option* exploratory_opt = nullptr;
};

void add_common(CLI::App& sub, CommonOpts& opts, bool config_required) {
    auto* cfg = sub.add_option("--config", opts.config_path, "key = value config file");
    if (config_required) cfg->required();
    sub.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    sub.add_option("--threads", opts.threads, "worker threads for independent runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    opts.seed_opt = sub.add_option("--seed", opts.seed, "master seed override");
    opts.runs_opt = sub.add_option("--runs", opts.runs, "independent run count override")
                        ->check(CLI::PositiveNumber);
    opts.snapshot_opt = sub.add_option("--snapshot-at", opts.snapshot_at,
                                       "lexicon snapshot times, comma separated")
                            ->delimiter(',');
    opts.strict_opt = sub.add_flag("--strict", "enforce the studied parameter ranges");
    opts.exploratory_opt =
        sub.add_flag("--exploratory", "permit out-of-range parameters (warnings only)");
    opts.strict_opt->excludes(opts.exploratory_opt);
    opts.exploratory_opt->excludes(opts.strict_opt);
}

void apply_overrides(ng::SimConfig& config, const CommonOpts& opts) {
    if (*opts.seed_opt) config.seed = opts.seed;
    if (*opts.runs_opt) config.runs = opts.runs;
    if (*opts.snapshot_opt) config.snapshot_at = opts.snapshot_at;
    if (*opts.strict_opt) config.strict_ranges = true;
    if (*opts.exploratory_opt) config.strict_ranges = false;
}

void print_warnings(const ng::ModelParams& params) {
    for (const std::string& w : ng::range_warnings(params))
        std::cerr << "warning: " << w << "\n";
}

void print_run_report(const ng::RunArtifacts& artifacts, const std::string& out_dir) {
    std::cout << "kernel: " << ng::kernels::active_kernel().name << "\n";
    for (std::size_t k = 0; k < artifacts.runs.size(); ++k) {
        const ng::RunCounters& c = artifacts.runs[k].counters;
        std::cout << "run " << k << ": reseeds=" << c.reseeds
                  << " noise_firings=" << c.noise_firings << "\n";
    }
    if (!artifacts.series.empty()) {
        const ng::AggregateRow& last = artifacts.series.back();
        std::cout << "t=" << last.t;
        if (last.success_rate.count > 0)
            std::cout << " success_rate=" << last.success_rate.mean
                      << " (se " << last.success_rate.se << ")";
        std::cout << " distinct_top_a=" << last.distinct_top_a.mean
                  << " distinct_top_b=" << last.distinct_top_b.mean << "\n";
    }
    std::cout << "wrote " << out_dir << "/{manifest.txt,timeseries.csv,gaps.csv";
    if (!artifacts.snapshots.empty()) std::cout << ",snapshots/";
    std::cout << "}\n";
}

int dispatch(const std::string& command, const CommonOpts& opts,
             std::int32_t baseline_n, std::int32_t baseline_r, std::int64_t baseline_trials) {
    if (command == "run") {
        ng::SimConfig config = opts.config_path.empty()
                                   ? ng::SimConfig{}
                                   : ng::config_from_kv(ng::parse_kv_file(opts.config_path));
        apply_overrides(config, opts);
        print_warnings(config.params);
        const ng::RunArtifacts artifacts = ng::cmd_run(config, opts.out_dir, opts.threads);
        print_run_report(artifacts, opts.out_dir);
        return 0;
    }
    if (command == "sweep") {
        ng::SweepSpec sweep = ng::sweep_from_kv(ng::parse_kv_file(opts.config_path));
        apply_overrides(sweep.base, opts);
        print_warnings(sweep.base.params);
        ng::cmd_sweep(sweep, opts.out_dir, opts.threads);
        std::cout << "kernel: " << ng::kernels::active_kernel().name << "\n";
        std::cout << "wrote " << opts.out_dir << "/summary.csv and "
                  << sweep.values.size() << " per-value directories\n";
        return 0;
    }
    // baseline
    const std::uint64_t seed = *opts.seed_opt ? opts.seed : 1;
    const ng::BaselineStats stats =
        ng::cmd_baseline(baseline_n, baseline_r, baseline_trials, seed, opts.out_dir);
    std::cout << "distinct_mean=" << stats.distinct_mean
              << " distinct_stddev=" << stats.distinct_stddev
              << " closed_form=" << ng::closed_form_distinct(baseline_n, baseline_r) << "\n";
    std::cout << "wrote " << opts.out_dir << "/baseline.csv\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-agent naming game simulator"};
    app.set_version_flag("--version", ng::kVersion);
    app.require_subcommand(1);

    CommonOpts run_opts;
    CLI::App* run_cmd = app.add_subcommand("run", "execute one configuration");
    add_common(*run_cmd, run_opts, /*config_required=*/false);

    CommonOpts sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "execute a one-axis parameter sweep");
    add_common(*sweep_cmd, sweep_opts, /*config_required=*/true);

    CommonOpts baseline_opts;
    std::int32_t baseline_n = 0;
    std::int32_t baseline_r = 0;
    std::int64_t baseline_trials = 100000;
    CLI::App* baseline_cmd =
        app.add_subcommand("baseline", "random-draw homonymy baseline statistics");
    baseline_cmd->add_option("--n", baseline_n, "object count")->required()
        ->check(CLI::PositiveNumber);
    baseline_cmd->add_option("--r", baseline_r, "word range")->required()
        ->check(CLI::PositiveNumber);
    baseline_cmd->add_option("--trials", baseline_trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    baseline_cmd->add_option("--out", baseline_opts.out_dir, "output directory")
        ->capture_default_str();
    baseline_opts.seed_opt =
        baseline_cmd->add_option("--seed", baseline_opts.seed, "baseline rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return dispatch("run", run_opts, 0, 0, 0);
        if (sweep_cmd->parsed()) return dispatch("sweep", sweep_opts, 0, 0, 0);
        return dispatch("baseline", baseline_opts, baseline_n, baseline_r, baseline_trials);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
