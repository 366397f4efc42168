#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ng/engine.hpp"

namespace ng {

// Unreadable, malformed or out-of-range configuration input. Maps to exit
// code 2 in the CLI.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using KvPairs = std::vector<std::pair<std::string, std::string>>;

// Flat `key = value` text, one pair per line; '#' starts a comment, blank
// lines are skipped.
KvPairs parse_kv_text(std::string_view text, const std::string& origin = "<string>");
KvPairs parse_kv_file(const std::string& path);

// Keys: n, l, r, epsilon, p, a, total_time, measure_every, snapshot_at
// (comma-separated list), runs, seed, mode (strict|exploratory). Every key
// has a default, so a config may set any subset. Unknown keys are rejected;
// the manifest meta key code_version is tolerated.
SimConfig config_from_kv(const KvPairs& kv);

// Canonical manifest body: every config key in fixed order plus
// code_version. Feeding the text back through config_from_kv reproduces the
// exact config.
std::string config_to_kv(const SimConfig& config);

// A one-axis parameter sweep: the base config plus an axis name in
// {n, l, r, epsilon, p, a} and the raw value tokens to substitute.
struct SweepSpec {
    SimConfig base;
    std::string axis;
    std::vector<std::string> values;
};

// Sweep file format: every config key, plus `axis = <name>` and
// `values = v1,v2,...`.
SweepSpec sweep_from_kv(const KvPairs& kv);

// Returns `config` with the axis parameter replaced by the parsed token.
SimConfig apply_axis_value(const SimConfig& config, const std::string& axis,
                           const std::string& token);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

} // namespace ng
