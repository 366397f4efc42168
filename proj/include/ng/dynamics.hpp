#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ng/kernels/similarity.hpp"
#include "ng/lexicon.hpp"
#include "ng/rng.hpp"

namespace ng {

struct ModelParams {
    std::int32_t n = 100;     // number of objects
    std::int32_t l = 10;      // inventory capacity
    std::int32_t r = 1000;    // verbal-space size; words live in [1, r]
    double epsilon = 1e-5;    // similarity regularizer
    double p = 0.0;           // per-attempt noise probability
    double a = 0.0;           // noise amplitude; shifts use its integer part
};

// Violations of the documented parameter ranges in strict mode, and of the
// hard mathematical constraints in any mode.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Range warnings for parameters outside the documented simulation ranges
// (100<=n<=1e3, 5<=l<=20, 500<=r<=1e4, 1e-5<=eps<=1e-1, 0<=p<=0.05,
// 0<=a<=10). Empty when everything is in range.
std::vector<std::string> range_warnings(const ModelParams& params);

// Throws ParamError on hard constraint violations (n,l,r >= 1, epsilon > 0,
// 0 <= p <= 1, a >= 0) in any mode, and on range warnings in strict mode.
void validate_params(const ModelParams& params, bool strict);

// Full record of one communication attempt. Objects are 0-based.
struct RoundOutcome {
    std::int32_t object;        // inventory index the speaker selected
    Word uttered;               // word chosen by the speaker
    Word received;              // word after the channel, == uttered when noise did not fire
    std::int32_t decoded;       // inventory index the hearer selected
    bool success;               // decoded == object
    std::int32_t speaker_rank;  // 1 = largest weight at utterance time, 2 = second, ...
    std::int32_t speaker;       // 0 = agent A spoke, 1 = agent B
    bool noise_fired;
    bool speaker_reseeded;      // the empty-inventory repair ran this round
};

// Reusable buffers for the decode hot path plus the similarity kernel in
// effect. Default-constructed scratch resolves the kernel on first use.
struct DecodeScratch {
    std::vector<kernels::InventoryView> views;
    std::vector<double> sims;
    kernels::SimilarityBatchFn kernel = nullptr;
};

// Returns index i with probability weights[i] / sum(weights). Consumes
// exactly one uniform draw. Zero-weight entries are never selected; an empty
// or all-zero pool throws std::invalid_argument.
template <class T>
std::size_t roulette_select(std::span<const T> weights, RunRng& rng) {
    double total = 0.0;
    for (const T w : weights) total += static_cast<double>(w);
    if (!(total > 0.0)) throw std::invalid_argument("roulette_select: degenerate selection pool");
    const double threshold = rng.next_unit() * total;
    double acc = 0.0;
    std::size_t last_positive = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0)) continue;
        acc += static_cast<double>(weights[i]);
        last_positive = i;
        if (threshold < acc) return i;
    }
    return last_positive;  // threshold landed on the top boundary
}

// Roulette pick of a word from the inventory bound to `object`, plus the
// word's rank at selection time.
std::pair<Word, std::int32_t> speaker_utter(const AgentLexicon& lex, std::int32_t object, RunRng& rng);

struct NoiseResult {
    Word word;
    bool fired;
};

// Channel noise: with probability p the word is shifted by a uniform integer
// in [-a, a], redrawn until the result stays in [1, r]. Always consumes one
// uniform draw for the fire decision.
NoiseResult apply_noise(Word x, const ModelParams& params, RunRng& rng);

// Similarity of a communicated word with one inventory:
// (1/sum_i w_i) * sum_i w_i / (epsilon + |x_i - x|). Computed by the active
// kernel; all kernels produce bit-identical values.
double similarity(const Inventory& inv, Word x, double epsilon);

// Computes the similarity of the communicated word with every inventory and
// roulette-selects an inventory index on those scores.
std::int32_t hearer_decode(const AgentLexicon& lex, Word x, double epsilon, RunRng& rng,
                           DecodeScratch& scratch);
std::int32_t hearer_decode(const AgentLexicon& lex, Word x, double epsilon, RunRng& rng);

// Success: both sides reinforce the communicated word by +1. The speaker
// reinforces what it uttered; the hearer only ever saw the received word and
// stores that, adding it with unit weight (evicting if full) when absent.
void update_on_success(Inventory& speaker_inv, Inventory& hearer_inv, Word uttered, Word received);

// Failure: the speaker's weight for the uttered word drops by 1 (removal at
// zero). The hearer inspects its inventory with the same index as the
// speaker's object and stores the received word there: +1 if present, else
// added with unit weight (evicting if full).
void update_on_failure(Inventory& speaker_inv, Inventory& hearer_target_inv, Word uttered, Word received);

// One full communication attempt: uniform object draw, speaker utterance,
// channel noise, hearer decode, then the success/failure updates. Both
// lexicons are mutated in place. If a failure empties the speaker's
// inventory, it is re-seeded with one uniform random word at unit weight and
// the outcome is flagged.
//
// Draw order per round (the determinism contract): object, speaker roulette,
// noise coin (+ noise shifts while out of range), decode roulette, re-seed
// word when the repair runs.
RoundOutcome communication_round(AgentLexicon& speaker, AgentLexicon& hearer,
                                 const ModelParams& params, RunRng& rng, DecodeScratch& scratch);
RoundOutcome communication_round(AgentLexicon& speaker, AgentLexicon& hearer,
                                 const ModelParams& params, RunRng& rng);

} // namespace ng
