#include "ng/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace ng {

std::vector<std::string> range_warnings(const ModelParams& params) {
    std::vector<std::string> out;
    auto flag = [&out](const std::string& msg) { out.push_back(msg); };
    if (params.n < 100 || params.n > 1000)
        flag("n=" + std::to_string(params.n) + " outside documented range [100, 1000]");
    if (params.l < 5 || params.l > 20)
        flag("l=" + std::to_string(params.l) + " outside documented range [5, 20]");
    if (params.r < 500 || params.r > 10000)
        flag("r=" + std::to_string(params.r) + " outside documented range [500, 10000]");
    if (params.epsilon < 1e-5 || params.epsilon > 1e-1) {
        std::ostringstream os;
        os << "epsilon=" << params.epsilon << " outside documented range [1e-05, 0.1]";
        flag(os.str());
    }
    if (params.p < 0.0 || params.p > 0.05) {
        std::ostringstream os;
        os << "p=" << params.p << " outside documented range [0, 0.05]";
        flag(os.str());
    }
    if (params.a < 0.0 || params.a > 10.0) {
        std::ostringstream os;
        os << "a=" << params.a << " outside documented range [0, 10]";
        flag(os.str());
    }
    return out;
}

void validate_params(const ModelParams& params, bool strict) {
    if (params.n < 1) throw ParamError("n must be >= 1");
    if (params.l < 1) throw ParamError("l must be >= 1");
    if (params.r < 1) throw ParamError("r must be >= 1");
    if (!(params.epsilon > 0.0)) throw ParamError("epsilon must be > 0");
    if (!(params.p >= 0.0 && params.p <= 1.0)) throw ParamError("p must be in [0, 1]");
    if (params.a < 0) throw ParamError("a must be >= 0");
    if (strict) {
        const auto warnings = range_warnings(params);
        if (!warnings.empty()) {
            std::string msg = "strict range check failed:";
            for (const auto& w : warnings) msg += "\n  " + w;
            throw ParamError(msg);
        }
    }
}

std::pair<Word, std::int32_t> speaker_utter(const AgentLexicon& lex, std::int32_t object, RunRng& rng) {
    const Inventory& inv = lex.inventory(object);
    const std::size_t slot = roulette_select(inv.weights(), rng);
    const Word chosen = inv.words()[slot];
    return {chosen, inv.rank_of(chosen)};
}

NoiseResult apply_noise(Word x, const ModelParams& params, RunRng& rng) {
    if (!rng.coin(params.p)) return {x, false};
    // Words are integers, so the shift magnitude is the integer part of a.
    const auto amax = static_cast<std::int32_t>(params.a);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(amax) + 1;
    Word shifted;
    do {
        const std::int32_t eta = static_cast<std::int32_t>(rng.below(span)) - amax;
        shifted = x + eta;
    } while (shifted < 1 || shifted > params.r);  // eta = 0 keeps this finite
    return {shifted, true};
}

double similarity(const Inventory& inv, Word x, double epsilon) {
    if (inv.empty()) throw std::logic_error("similarity: empty inventory");
    const kernels::InventoryView view = inv.view();
    double out;
    kernels::active_kernel().fn(&view, 1, static_cast<double>(x), epsilon, &out);
    return out;
}

std::int32_t hearer_decode(const AgentLexicon& lex, Word x, double epsilon, RunRng& rng,
                           DecodeScratch& scratch) {
    if (scratch.kernel == nullptr) scratch.kernel = kernels::active_kernel().fn;
    lex.fill_views(scratch.views);
    scratch.sims.resize(scratch.views.size());
    scratch.kernel(scratch.views.data(), scratch.views.size(), static_cast<double>(x), epsilon,
                   scratch.sims.data());
    return static_cast<std::int32_t>(roulette_select(std::span<const double>(scratch.sims), rng));
}

std::int32_t hearer_decode(const AgentLexicon& lex, Word x, double epsilon, RunRng& rng) {
    DecodeScratch scratch;
    return hearer_decode(lex, x, epsilon, rng, scratch);
}

namespace {

// Shared hearer-side store rule: reinforce the received word when present,
// otherwise add it with unit weight (evicting if full).
void hearer_store(Inventory& inv, Word received) {
    if (inv.contains(received))
        inv.reinforce(received, +1);
    else
        inv.add_word(received);
}

} // namespace

void update_on_success(Inventory& speaker_inv, Inventory& hearer_inv, Word uttered, Word received) {
    speaker_inv.reinforce(uttered, +1);
    hearer_store(hearer_inv, received);
}

void update_on_failure(Inventory& speaker_inv, Inventory& hearer_target_inv, Word uttered, Word received) {
    speaker_inv.reinforce(uttered, -1);
    hearer_store(hearer_target_inv, received);
}

RoundOutcome communication_round(AgentLexicon& speaker, AgentLexicon& hearer,
                                 const ModelParams& params, RunRng& rng, DecodeScratch& scratch) {
    const auto object = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(params.n)));
    const auto [uttered, rank] = speaker_utter(speaker, object, rng);
    const NoiseResult channel = apply_noise(uttered, params, rng);
    const std::int32_t decoded = hearer_decode(hearer, channel.word, params.epsilon, rng, scratch);

    RoundOutcome outcome{object, uttered, channel.word, decoded, decoded == object,
                         rank, 0, channel.fired, false};
    if (outcome.success) {
        update_on_success(speaker.inventory(object), hearer.inventory(object), uttered, channel.word);
    } else {
        update_on_failure(speaker.inventory(object), hearer.inventory(object), uttered, channel.word);
        Inventory& spoken = speaker.inventory(object);
        if (spoken.empty()) {
            spoken.reseed(rng.word(params.r));
            outcome.speaker_reseeded = true;
        }
    }
    return outcome;
}

RoundOutcome communication_round(AgentLexicon& speaker, AgentLexicon& hearer,
                                 const ModelParams& params, RunRng& rng) {
    DecodeScratch scratch;
    return communication_round(speaker, hearer, params, rng, scratch);
}

} // namespace ng
