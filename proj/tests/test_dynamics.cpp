#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "ng/dynamics.hpp"
#include "support/stats.hpp"

using ng::AgentLexicon;
using ng::Inventory;
using ng::ModelParams;
using ng::ParamError;
using ng::RoundOutcome;
using ng::RunRng;

TEST_SUITE("dynamics") {

TEST_CASE("default parameters satisfy the strict ranges") {
    CHECK_NOTHROW(ng::validate_params(ModelParams{}, true));
    CHECK(ng::range_warnings(ModelParams{}).empty());
}

TEST_CASE("strict mode rejects out-of-range values, exploratory only warns") {
    ModelParams params;
    params.n = 10;
    params.r = 50;
    CHECK_THROWS_AS(ng::validate_params(params, true), ParamError);
    CHECK_NOTHROW(ng::validate_params(params, false));
    CHECK(ng::range_warnings(params).size() == 2);
}

TEST_CASE("hard constraints hold in both modes") {
    auto reject = [](auto mutate) {
        ModelParams params;
        mutate(params);
        CHECK_THROWS_AS(ng::validate_params(params, true), ParamError);
        CHECK_THROWS_AS(ng::validate_params(params, false), ParamError);
    };
    reject([](ModelParams& q) { q.n = 0; });
    reject([](ModelParams& q) { q.l = 0; });
    reject([](ModelParams& q) { q.r = 0; });
    reject([](ModelParams& q) { q.epsilon = 0.0; });
    reject([](ModelParams& q) { q.epsilon = -1.0; });
    reject([](ModelParams& q) { q.p = -0.1; });
    reject([](ModelParams& q) { q.p = 1.5; });
    reject([](ModelParams& q) { q.a = -1.0; });
}

TEST_CASE("roulette frequencies follow the weights") {
    RunRng rng(8);
    const std::vector<std::int32_t> weights{1, 3};
    std::int64_t picked_heavy = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        if (ng::roulette_select(std::span<const std::int32_t>(weights), rng) == 1) ++picked_heavy;
    CHECK(static_cast<double>(picked_heavy) / draws == doctest::Approx(0.75).epsilon(0.015));
}

TEST_CASE("roulette is unbiased across a mixed pool") {
    RunRng rng(17);
    const std::vector<std::int32_t> weights{1, 2, 3, 4};
    std::array<std::int64_t, 4> counts{};
    for (int i = 0; i < 100000; ++i)
        ++counts[ng::roulette_select(std::span<const std::int32_t>(weights), rng)];
    const std::array<double, 4> probs{0.1, 0.2, 0.3, 0.4};
    CHECK(testsupport::chi_square_stat(counts, probs) < testsupport::chi_square_critical_1e3(3));
}

TEST_CASE("roulette never picks zero-weight entries") {
    RunRng rng(4);
    const std::vector<std::int32_t> gapped{0, 5};
    for (int i = 0; i < 2000; ++i)
        CHECK(ng::roulette_select(std::span<const std::int32_t>(gapped), rng) == 1);
    const std::vector<std::int32_t> middle{1, 0, 1};
    for (int i = 0; i < 2000; ++i)
        CHECK(ng::roulette_select(std::span<const std::int32_t>(middle), rng) != 1);
}

TEST_CASE("roulette rejects degenerate pools") {
    RunRng rng(1);
    const std::vector<std::int32_t> empty;
    const std::vector<std::int32_t> zeros{0, 0};
    CHECK_THROWS_AS(ng::roulette_select(std::span<const std::int32_t>(empty), rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(ng::roulette_select(std::span<const std::int32_t>(zeros), rng),
                    std::invalid_argument);
}

TEST_CASE("roulette consumes exactly one uniform draw") {
    RunRng a(90);
    RunRng b(90);
    const std::vector<std::int32_t> weights{2, 2, 2};
    (void)ng::roulette_select(std::span<const std::int32_t>(weights), a);
    (void)b.next_unit();
    for (int i = 0; i < 8; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("speaker_utter picks by weight and reports the rank") {
    AgentLexicon lex(1, 5);
    lex.inventory(0).add_word(300);
    RunRng rng(2);
    auto [word, rank] = ng::speaker_utter(lex, 0, rng);
    CHECK(word == 300);
    CHECK(rank == 1);

    lex.inventory(0).add_word(100);
    lex.inventory(0).reinforce(100, +1);
    lex.inventory(0).reinforce(100, +1);
    std::int64_t heavy = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        auto [w, rk] = ng::speaker_utter(lex, 0, rng);
        if (w == 100) {
            CHECK(rk == 1);
            ++heavy;
        } else {
            CHECK(rk == 2);
        }
    }
    CHECK(static_cast<double>(heavy) / draws == doctest::Approx(0.75).epsilon(0.015));
}

TEST_CASE("noise is silent when p = 0 but still advances the stream") {
    ModelParams params;
    params.p = 0.0;
    RunRng a(5);
    RunRng b(5);
    const auto res = ng::apply_noise(123, params, a);
    CHECK(res.word == 123);
    CHECK_FALSE(res.fired);
    (void)b.next_unit();
    for (int i = 0; i < 8; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("noise with zero amplitude fires but cannot move the word") {
    ModelParams params;
    params.p = 1.0;
    params.a = 0.0;
    RunRng rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto res = ng::apply_noise(77, params, rng);
        CHECK(res.word == 77);
        CHECK(res.fired);
    }
}

TEST_CASE("noise at the lower boundary redraws into the valid shifts") {
    // x = 1, a = 2: reachable words are exactly {1, 2, 3}, equally likely.
    ModelParams params;
    params.p = 1.0;
    params.a = 2.0;
    params.r = 1000;
    RunRng rng(9);
    std::array<std::int64_t, 3> counts{};
    for (int i = 0; i < 90000; ++i) {
        const auto res = ng::apply_noise(1, params, rng);
        REQUIRE(res.word >= 1);
        REQUIRE(res.word <= 3);
        ++counts[res.word - 1];
    }
    const std::array<double, 3> probs{1.0 / 3, 1.0 / 3, 1.0 / 3};
    CHECK(testsupport::chi_square_stat(counts, probs) < testsupport::chi_square_critical_1e3(2));
}

TEST_CASE("noise at the upper boundary mirrors the lower one") {
    ModelParams params;
    params.p = 1.0;
    params.a = 2.0;
    params.r = 500;
    RunRng rng(10);
    for (int i = 0; i < 5000; ++i) {
        const auto res = ng::apply_noise(500, params, rng);
        CHECK(res.word >= 498);
        CHECK(res.word <= 500);
    }
}

TEST_CASE("noise amplitude uses the integer part of a") {
    ModelParams params;
    params.p = 1.0;
    params.a = 2.9;
    params.r = 1000;
    RunRng rng(11);
    for (int i = 0; i < 20000; ++i) {
        const auto res = ng::apply_noise(500, params, rng);
        CHECK(res.word >= 498);
        CHECK(res.word <= 502);
    }
}

TEST_CASE("noise fires at the configured probability") {
    ModelParams params;
    params.p = 0.05;
    params.a = 1.0;
    RunRng rng(12);
    std::int64_t fired = 0;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i)
        if (ng::apply_noise(400, params, rng).fired) ++fired;
    CHECK(static_cast<double>(fired) / draws == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("similarity hand examples through the inventory path") {
    Inventory two(5);
    two.add_word(50);
    two.reinforce(50, +1);
    two.add_word(60);
    CHECK(ng::similarity(two, 50, 0.1) == 6.699669966996699);

    Inventory one(5);
    one.add_word(20);
    CHECK(ng::similarity(one, 25, 0.1) == 0.19607843137254904);

    Inventory empty(5);
    CHECK_THROWS_AS(ng::similarity(empty, 1, 0.1), std::logic_error);
}

TEST_CASE("decode picks inventories in proportion to their similarity") {
    AgentLexicon lex(2, 5);
    lex.inventory(0).add_word(10);
    lex.inventory(1).add_word(20);
    const double s0 = ng::similarity(lex.inventory(0), 10, 0.1);
    const double s1 = ng::similarity(lex.inventory(1), 10, 0.1);
    const double expect0 = s0 / (s0 + s1);

    RunRng rng(13);
    ng::DecodeScratch scratch;
    std::int64_t picked0 = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        if (ng::hearer_decode(lex, 10, 0.1, rng, scratch) == 0) ++picked0;
    CHECK(static_cast<double>(picked0) / draws == doctest::Approx(expect0).epsilon(0.01));
}

TEST_CASE("decode scratch and convenience overload agree") {
    AgentLexicon lex(3, 5);
    lex.inventory(0).add_word(100);
    lex.inventory(1).add_word(200);
    lex.inventory(2).add_word(300);
    RunRng a(14);
    RunRng b(14);
    ng::DecodeScratch scratch;
    for (int i = 0; i < 200; ++i)
        CHECK(ng::hearer_decode(lex, 150, 1e-3, a, scratch) ==
              ng::hearer_decode(lex, 150, 1e-3, b));
}

TEST_CASE("success reinforces both sides") {
    Inventory speaker(3);
    speaker.add_word(7);
    speaker.reinforce(7, +1);
    Inventory hearer(3);
    hearer.add_word(7);
    ng::update_on_success(speaker, hearer, 7, 7);
    CHECK(speaker.entry(speaker.find(7)).weight == 3);
    CHECK(hearer.entry(hearer.find(7)).weight == 2);
}

TEST_CASE("success adds the missing word on the hearer side, evicting if full") {
    Inventory speaker(3);
    speaker.add_word(7);
    Inventory hearer(2);
    hearer.add_word(50);
    hearer.add_word(60);
    hearer.reinforce(60, +1);
    ng::update_on_success(speaker, hearer, 7, 7);
    CHECK(hearer.contains(7));
    CHECK(hearer.entry(hearer.find(7)).weight == 1);
    CHECK_FALSE(hearer.contains(50));  // lightest entry gave way
    CHECK(hearer.contains(60));
}

TEST_CASE("the hearer stores what it heard, not what was said") {
    Inventory speaker(3);
    speaker.add_word(100);
    Inventory hearer(3);
    hearer.add_word(103);
    ng::update_on_success(speaker, hearer, 100, 103);
    CHECK(speaker.entry(speaker.find(100)).weight == 2);
    CHECK(hearer.entry(hearer.find(103)).weight == 2);
    CHECK_FALSE(hearer.contains(100));
}

TEST_CASE("failure weakens the speaker and can empty the inventory") {
    Inventory speaker(3);
    speaker.add_word(9);
    Inventory target(3);
    target.add_word(9);
    ng::update_on_failure(speaker, target, 9, 9);
    CHECK(speaker.empty());
    CHECK(target.entry(target.find(9)).weight == 2);
}

TEST_CASE("failure teaches the target inventory the received word") {
    Inventory speaker(3);
    speaker.add_word(9);
    speaker.reinforce(9, +1);
    Inventory target(3);
    target.add_word(40);
    ng::update_on_failure(speaker, target, 9, 11);
    CHECK(speaker.entry(speaker.find(9)).weight == 1);
    CHECK(target.contains(11));
    CHECK(target.contains(40));
}

TEST_CASE("rounds are reproducible from the seed") {
    ModelParams params;
    params.n = 100;
    params.l = 5;
    params.r = 500;
    params.epsilon = 1e-3;
    params.p = 0.05;
    params.a = 5.0;

    auto play = [&](std::uint64_t seed) {
        RunRng rng(seed);
        AgentLexicon a(params.n, params.l);
        AgentLexicon b(params.n, params.l);
        for (std::int32_t k = 0; k < params.n; ++k) a.inventory(k).reseed(rng.word(params.r));
        for (std::int32_t k = 0; k < params.n; ++k) b.inventory(k).reseed(rng.word(params.r));
        ng::DecodeScratch scratch;
        std::vector<RoundOutcome> outcomes;
        for (int i = 0; i < 2000; ++i)
            outcomes.push_back(ng::communication_round(a, b, params, rng, scratch));
        return std::tuple(outcomes, a, b);
    };

    const auto [o1, a1, b1] = play(424242);
    const auto [o2, a2, b2] = play(424242);
    REQUIRE(o1.size() == o2.size());
    for (std::size_t i = 0; i < o1.size(); ++i) {
        CHECK(o1[i].object == o2[i].object);
        CHECK(o1[i].uttered == o2[i].uttered);
        CHECK(o1[i].received == o2[i].received);
        CHECK(o1[i].decoded == o2[i].decoded);
        CHECK(o1[i].success == o2[i].success);
        CHECK(o1[i].speaker_rank == o2[i].speaker_rank);
        CHECK(o1[i].noise_fired == o2[i].noise_fired);
        CHECK(o1[i].speaker_reseeded == o2[i].speaker_reseeded);
    }
    CHECK(a1 == a2);
    CHECK(b1 == b2);
}

TEST_CASE("object selection is uniform") {
    ModelParams params;
    params.n = 5;
    params.l = 5;
    params.r = 500;
    params.epsilon = 0.1;
    RunRng rng(31);
    AgentLexicon a(params.n, params.l);
    AgentLexicon b(params.n, params.l);
    for (std::int32_t k = 0; k < params.n; ++k) a.inventory(k).reseed(rng.word(params.r));
    for (std::int32_t k = 0; k < params.n; ++k) b.inventory(k).reseed(rng.word(params.r));
    ng::DecodeScratch scratch;
    std::array<std::int64_t, 5> counts{};
    for (int i = 0; i < 50000; ++i)
        ++counts[ng::communication_round(a, b, params, rng, scratch).object];
    std::array<double, 5> probs;
    probs.fill(0.2);
    CHECK(testsupport::chi_square_stat(counts, probs) < testsupport::chi_square_critical_1e3(4));
}

TEST_CASE("a single object cannot be misunderstood") {
    ModelParams params;
    params.n = 1;
    params.l = 5;
    params.r = 500;
    params.epsilon = 0.1;
    RunRng rng(77);
    AgentLexicon a(1, params.l);
    AgentLexicon b(1, params.l);
    a.inventory(0).reseed(rng.word(params.r));
    b.inventory(0).reseed(rng.word(params.r));
    ng::DecodeScratch scratch;
    for (int i = 0; i < 500; ++i) {
        const RoundOutcome o = ng::communication_round(a, b, params, rng, scratch);
        CHECK(o.success);
        CHECK(o.decoded == 0);
    }
    CHECK(a.inventory(0).weight_sum() > 400);
}

TEST_CASE("an emptied speaker inventory is repaired in the same round") {
    // Speaker holds one weight-1 word for object 0; the hearer's inventory
    // for object 1 matches that word far better, so the decode fails and the
    // speaker's entry drops to weight 0.
    ModelParams params;
    params.n = 2;
    params.l = 5;
    params.r = 500;
    params.epsilon = 1e-5;

    bool exercised = false;
    for (std::uint64_t seed = 0; seed < 64 && !exercised; ++seed) {
        RunRng rng(seed);
        AgentLexicon speaker(2, params.l);
        speaker.inventory(0).reseed(100);
        speaker.inventory(1).reseed(400);
        AgentLexicon hearer(2, params.l);
        hearer.inventory(0).reseed(350);
        hearer.inventory(1).reseed(100);
        const RoundOutcome o = ng::communication_round(speaker, hearer, params, rng);
        if (o.object != 0) continue;
        exercised = true;
        CHECK(o.uttered == 100);
        CHECK(o.decoded == 1);
        CHECK_FALSE(o.success);
        CHECK(o.speaker_reseeded);
        CHECK(speaker.inventory(0).size() == 1);
        CHECK(speaker.inventory(0).weight_sum() == 1);
        // failure still teaches the hearer's object-0 inventory the word
        CHECK(hearer.inventory(0).contains(100));
    }
    CHECK(exercised);
}

} // TEST_SUITE
