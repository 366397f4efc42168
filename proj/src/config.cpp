#include "ng/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "ng/version.hpp"

namespace ng {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

std::int64_t parse_int64(const std::string& key, std::string_view token) {
    const std::string buf(token);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE)
        fail(key + ": expected an integer, got '" + buf + "'");
    return v;
}

std::int32_t parse_int32(const std::string& key, std::string_view token) {
    const std::int64_t v = parse_int64(key, token);
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
        fail(key + ": value " + std::string(token) + " out of 32-bit range");
    return static_cast<std::int32_t>(v);
}

std::uint64_t parse_uint64(const std::string& key, std::string_view token) {
    const std::string buf(token);
    if (buf.empty() || buf[0] == '-') fail(key + ": expected a non-negative integer, got '" + buf + "'");
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size() || errno == ERANGE)
        fail(key + ": expected a non-negative integer, got '" + buf + "'");
    return v;
}

double parse_double(const std::string& key, std::string_view token) {
    const std::string buf(token);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE)
        fail(key + ": expected a number, got '" + buf + "'");
    return v;
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        const std::string_view piece = trim(value.substr(start, comma - start));
        if (!piece.empty()) out.emplace_back(piece);
        start = comma + 1;
    }
    return out;
}

} // namespace

KvPairs parse_kv_text(std::string_view text, const std::string& origin) {
    KvPairs pairs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(origin + ":" + std::to_string(line_no) + ": empty key");
        pairs.emplace_back(std::string(key), std::string(value));
    }
    return pairs;
}

KvPairs parse_kv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kv_text(buf.str(), path);
}

namespace {

// Shared key dispatch for configs and sweep files; `extra` picks up the keys
// the caller layers on top (sweep axis/values), returning true when consumed.
template <typename ExtraFn>
SimConfig config_from_kv_impl(const KvPairs& kv, ExtraFn extra) {
    SimConfig config;
    std::vector<std::string> seen;
    for (const auto& [key, value] : kv) {
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            fail("duplicate key '" + key + "'");
        seen.push_back(key);

        if (key == "n") config.params.n = parse_int32(key, value);
        else if (key == "l") config.params.l = parse_int32(key, value);
        else if (key == "r") config.params.r = parse_int32(key, value);
        else if (key == "epsilon") config.params.epsilon = parse_double(key, value);
        else if (key == "p") config.params.p = parse_double(key, value);
        else if (key == "a") config.params.a = parse_double(key, value);
        else if (key == "total_time") config.total_time = parse_int64(key, value);
        else if (key == "measure_every") config.measure_every = parse_int64(key, value);
        else if (key == "snapshot_at") {
            config.snapshot_at.clear();
            for (const std::string& token : split_list(value))
                config.snapshot_at.push_back(parse_int64(key, token));
        } else if (key == "runs") config.runs = parse_int32(key, value);
        else if (key == "seed") config.seed = parse_uint64(key, value);
        else if (key == "mode") {
            if (value == "strict") config.strict_ranges = true;
            else if (value == "exploratory") config.strict_ranges = false;
            else fail("mode: expected 'strict' or 'exploratory', got '" + value + "'");
        } else if (key == "code_version") {
            // manifest meta key, accepted so a manifest re-runs as a config
        } else if (!extra(key, value)) {
            fail("unknown key '" + key + "'");
        }
    }
    return config;
}

} // namespace

SimConfig config_from_kv(const KvPairs& kv) {
    return config_from_kv_impl(kv, [](const std::string&, const std::string&) { return false; });
}

std::string config_to_kv(const SimConfig& config) {
    std::ostringstream out;
    out << "n = " << config.params.n << "\n";
    out << "l = " << config.params.l << "\n";
    out << "r = " << config.params.r << "\n";
    out << "epsilon = " << format_double(config.params.epsilon) << "\n";
    out << "p = " << format_double(config.params.p) << "\n";
    out << "a = " << format_double(config.params.a) << "\n";
    out << "total_time = " << config.total_time << "\n";
    out << "measure_every = " << config.measure_every << "\n";
    out << "snapshot_at = ";
    for (std::size_t i = 0; i < config.snapshot_at.size(); ++i) {
        if (i) out << ',';
        out << config.snapshot_at[i];
    }
    out << "\n";
    out << "runs = " << config.runs << "\n";
    out << "seed = " << config.seed << "\n";
    out << "mode = " << (config.strict_ranges ? "strict" : "exploratory") << "\n";
    out << "code_version = " << kVersion << "\n";
    return out.str();
}

SweepSpec sweep_from_kv(const KvPairs& kv) {
    SweepSpec spec;
    spec.base = config_from_kv_impl(kv, [&](const std::string& key, const std::string& value) {
        if (key == "axis") { spec.axis = value; return true; }
        if (key == "values") { spec.values = split_list(value); return true; }
        return false;
    });
    static const char* axes[] = {"n", "l", "r", "epsilon", "p", "a"};
    if (std::find_if(std::begin(axes), std::end(axes),
                     [&](const char* s) { return spec.axis == s; }) == std::end(axes))
        fail("axis: expected one of n, l, r, epsilon, p, a; got '" + spec.axis + "'");
    if (spec.values.empty()) fail("values: expected at least one value");
    for (const std::string& token : spec.values)
        apply_axis_value(spec.base, spec.axis, token);  // eager validation
    return spec;
}

SimConfig apply_axis_value(const SimConfig& config, const std::string& axis,
                           const std::string& token) {
    SimConfig out = config;
    if (axis == "n") out.params.n = parse_int32(axis, token);
    else if (axis == "l") out.params.l = parse_int32(axis, token);
    else if (axis == "r") out.params.r = parse_int32(axis, token);
    else if (axis == "epsilon") out.params.epsilon = parse_double(axis, token);
    else if (axis == "p") out.params.p = parse_double(axis, token);
    else if (axis == "a") out.params.a = parse_double(axis, token);
    else fail("axis: expected one of n, l, r, epsilon, p, a; got '" + axis + "'");
    return out;
}

std::string format_double(double v) {
    char buf[64];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

} // namespace ng
