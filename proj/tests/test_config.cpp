#include <cstdint>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "ng/config.hpp"

using ng::ConfigError;
using ng::KvPairs;
using ng::SimConfig;
using ng::SweepSpec;

namespace {

bool same_config(const SimConfig& x, const SimConfig& y) {
    return x.params.n == y.params.n && x.params.l == y.params.l && x.params.r == y.params.r &&
           x.params.epsilon == y.params.epsilon && x.params.p == y.params.p &&
           x.params.a == y.params.a && x.total_time == y.total_time &&
           x.measure_every == y.measure_every && x.snapshot_at == y.snapshot_at &&
           x.runs == y.runs && x.seed == y.seed && x.strict_ranges == y.strict_ranges;
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("key value text parsing") {
    const KvPairs kv = ng::parse_kv_text(
        "# leading comment\n"
        "n = 200\n"
        "\n"
        "  epsilon=0.01   # trailing comment\n"
        "snapshot_at =\n");
    REQUIRE(kv.size() == 3);
    CHECK(kv[0] == std::pair<std::string, std::string>("n", "200"));
    CHECK(kv[1] == std::pair<std::string, std::string>("epsilon", "0.01"));
    CHECK(kv[2] == std::pair<std::string, std::string>("snapshot_at", ""));
}

TEST_CASE("malformed lines name their location") {
    CHECK_THROWS_WITH_AS(ng::parse_kv_text("n = 1\nbogus line\n", "conf"),
                         doctest::Contains("conf:2"), ConfigError);
    CHECK_THROWS_AS(ng::parse_kv_text("= 5\n"), ConfigError);
    CHECK_THROWS_AS(ng::parse_kv_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("an empty config gives the default configuration") {
    const SimConfig config = ng::config_from_kv({});
    CHECK(same_config(config, SimConfig{}));
    CHECK(config.params.n == 100);
    CHECK(config.params.l == 10);
    CHECK(config.params.r == 1000);
    CHECK(config.params.epsilon == 1e-5);
    CHECK(config.params.p == 0.0);
    CHECK(config.params.a == 0.0);
    CHECK(config.total_time == 100);
    CHECK(config.measure_every == 1);
    CHECK(config.snapshot_at.empty());
    CHECK(config.runs == 1);
    CHECK(config.seed == 1);
    CHECK(config.strict_ranges);
}

TEST_CASE("every key is parsed into its field") {
    const SimConfig config = ng::config_from_kv(ng::parse_kv_text(
        "n = 500\nl = 20\nr = 10000\nepsilon = 0.1\np = 0.05\na = 10\n"
        "total_time = 2500\nmeasure_every = 10\nsnapshot_at = 0, 100, 2500\n"
        "runs = 8\nseed = 123456789\nmode = exploratory\n"));
    CHECK(config.params.n == 500);
    CHECK(config.params.l == 20);
    CHECK(config.params.r == 10000);
    CHECK(config.params.epsilon == 0.1);
    CHECK(config.params.p == 0.05);
    CHECK(config.params.a == 10.0);
    CHECK(config.total_time == 2500);
    CHECK(config.measure_every == 10);
    CHECK(config.snapshot_at == std::vector<std::int64_t>{0, 100, 2500});
    CHECK(config.runs == 8);
    CHECK(config.seed == 123456789);
    CHECK_FALSE(config.strict_ranges);
}

TEST_CASE("unknown and repeated keys are rejected, the manifest meta key is not") {
    CHECK_THROWS_AS(ng::config_from_kv({{"banana", "1"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"n", "100"}, {"n", "200"}}), ConfigError);
    CHECK_NOTHROW(ng::config_from_kv({{"code_version", "whatever 9.9"}}));
}

TEST_CASE("values must parse completely") {
    CHECK_THROWS_AS(ng::config_from_kv({{"n", "12x"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"n", ""}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"epsilon", "0.1.2"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"seed", "-4"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"mode", "standard"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"snapshot_at", "1,two"}}), ConfigError);
    CHECK_THROWS_AS(ng::config_from_kv({{"n", "99999999999"}}), ConfigError);
    CHECK_NOTHROW(ng::config_from_kv({{"epsilon", "1e-5"}}));
    CHECK_NOTHROW(ng::config_from_kv({{"seed", "18446744073709551615"}}));
}

TEST_CASE("manifests round-trip exactly") {
    SimConfig config;
    config.params.n = 250;
    config.params.l = 7;
    config.params.r = 5000;
    config.params.epsilon = 1e-5;
    config.params.p = 0.0317;
    config.params.a = 2.5;
    config.total_time = 1234;
    config.measure_every = 3;
    config.snapshot_at = {0, 1000};
    config.runs = 4;
    config.seed = 0xFEEDFACE;
    config.strict_ranges = false;

    const std::string manifest = ng::config_to_kv(config);
    const SimConfig back = ng::config_from_kv(ng::parse_kv_text(manifest));
    CHECK(same_config(config, back));
    CHECK(ng::config_to_kv(back) == manifest);

    const SimConfig defaults;
    CHECK(same_config(defaults,
                      ng::config_from_kv(ng::parse_kv_text(ng::config_to_kv(defaults)))));
}

TEST_CASE("shortest round-trip double formatting") {
    for (const double v : {0.1, 1e-5, 0.05, 1.0 / 3.0, 393.6210551388153, 2.5, 0.0,
                           6.02e23, 4.9406564584124654e-324}) {
        const std::string s = ng::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(ng::format_double(2.0) == "2");
    CHECK(ng::format_double(0.1) == "0.1");
}

TEST_CASE("sweep files extend the config format") {
    const SweepSpec sweep = ng::sweep_from_kv(ng::parse_kv_text(
        "n = 100\nr = 500\ntotal_time = 50\naxis = epsilon\nvalues = 1e-5, 1e-3, 0.1\n"));
    CHECK(sweep.axis == "epsilon");
    REQUIRE(sweep.values.size() == 3);
    CHECK(sweep.values[0] == "1e-5");
    CHECK(sweep.base.params.n == 100);
    CHECK(sweep.base.params.r == 500);

    const SimConfig applied = ng::apply_axis_value(sweep.base, "epsilon", "1e-3");
    CHECK(applied.params.epsilon == 1e-3);
    CHECK(applied.params.n == 100);
}

TEST_CASE("sweeps validate the axis and the values") {
    CHECK_THROWS_AS(ng::sweep_from_kv(ng::parse_kv_text("axis = seed\nvalues = 1,2\n")),
                    ConfigError);
    CHECK_THROWS_AS(ng::sweep_from_kv(ng::parse_kv_text("axis = n\nvalues =\n")), ConfigError);
    CHECK_THROWS_AS(ng::sweep_from_kv(ng::parse_kv_text("values = 1,2\n")), ConfigError);
    CHECK_THROWS_AS(ng::sweep_from_kv(ng::parse_kv_text("axis = n\nvalues = 10,oops\n")),
                    ConfigError);
    CHECK_THROWS_AS(ng::apply_axis_value(SimConfig{}, "seed", "5"), ConfigError);
}

TEST_CASE("each integer axis rejects fractional tokens") {
    const SimConfig base;
    CHECK_THROWS_AS(ng::apply_axis_value(base, "n", "1.5"), ConfigError);
    CHECK(ng::apply_axis_value(base, "l", "12").params.l == 12);
    CHECK(ng::apply_axis_value(base, "r", "750").params.r == 750);
    CHECK(ng::apply_axis_value(base, "p", "0.01").params.p == 0.01);
    CHECK(ng::apply_axis_value(base, "a", "7").params.a == 7.0);
}

} // TEST_SUITE
