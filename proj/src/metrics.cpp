#include "ng/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ng {

void MetricsWindow::add(const RoundOutcome& outcome) {
    ++attempts;
    if (outcome.success) ++successes;
    if (outcome.speaker_rank == 1) {
        ++rank1_utterances;
        if (outcome.success) ++rank1_successes;
    } else if (outcome.speaker_rank == 2) {
        ++rank2_utterances;
        if (outcome.success) ++rank2_successes;
    }
}

std::optional<double> MetricsWindow::success_rate() const {
    if (attempts == 0) return std::nullopt;
    return static_cast<double>(successes) / static_cast<double>(attempts);
}

std::optional<double> MetricsWindow::rank_fraction(int rank) const {
    if (attempts == 0) return std::nullopt;
    const std::int64_t utt = rank == 1 ? rank1_utterances : rank2_utterances;
    return static_cast<double>(utt) / static_cast<double>(attempts);
}

std::optional<double> MetricsWindow::success_rate_by_rank(int rank) const {
    const std::int64_t utt = rank == 1 ? rank1_utterances : rank2_utterances;
    const std::int64_t succ = rank == 1 ? rank1_successes : rank2_successes;
    if (utt == 0) return std::nullopt;
    return static_cast<double>(succ) / static_cast<double>(utt);
}

namespace {

std::vector<Word> top_words(const AgentLexicon& lex) {
    std::vector<Word> tops;
    tops.reserve(static_cast<std::size_t>(lex.object_count()));
    for (std::int32_t k = 0; k < lex.object_count(); ++k)
        tops.push_back(lex.inventory(k).top_entry().word);
    return tops;
}

} // namespace

std::int32_t distinct_top_words(const AgentLexicon& lex) {
    std::vector<Word> tops = top_words(lex);
    std::sort(tops.begin(), tops.end());
    const auto end = std::unique(tops.begin(), tops.end());
    return static_cast<std::int32_t>(end - tops.begin());
}

double GapHistogram::at(std::int32_t d) const {
    const auto it = counts.find(d);
    return it == counts.end() ? 0.0 : it->second;
}

GapHistogram gap_distribution(const AgentLexicon& lex) {
    std::vector<Word> tops = top_words(lex);
    std::sort(tops.begin(), tops.end());
    GapHistogram h;
    h.sample_size = 1;
    for (std::size_t i = 1; i < tops.size(); ++i) h.counts[tops[i] - tops[i - 1]] += 1.0;
    return h;
}

void GapAccumulator::add(const GapHistogram& h) {
    if (h.sample_size != 1)
        throw std::invalid_argument("GapAccumulator: expected a single-lexicon histogram");
    for (const auto& [d, c] : h.counts) sums_[d] += c;
    ++samples_;
}

GapHistogram GapAccumulator::mean() const {
    GapHistogram out;
    out.sample_size = samples_;
    if (samples_ == 0) return out;
    for (const auto& [d, c] : sums_) out.counts[d] = c / static_cast<double>(samples_);
    return out;
}

double closed_form_distinct(std::int64_t n, std::int64_t r) {
    const double rd = static_cast<double>(r);
    return rd * (1.0 - std::pow(1.0 - 1.0 / rd, static_cast<double>(n)));
}

BaselineStats random_baseline(std::int32_t n, std::int32_t r, std::int64_t trials, RunRng& rng) {
    if (trials < 1) throw std::invalid_argument("random_baseline: trials must be >= 1");
    std::vector<Word> draw(static_cast<std::size_t>(n));
    GapAccumulator gaps;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        for (auto& w : draw) w = rng.word(r);
        std::sort(draw.begin(), draw.end());
        std::int32_t distinct = 1;
        GapHistogram h;
        h.sample_size = 1;
        for (std::size_t i = 1; i < draw.size(); ++i) {
            const Word gap = draw[i] - draw[i - 1];
            if (gap != 0) ++distinct;
            h.counts[gap] += 1.0;
        }
        gaps.add(h);
        sum += distinct;
        sum_sq += static_cast<double>(distinct) * static_cast<double>(distinct);
    }
    BaselineStats out;
    out.distinct_mean = sum / static_cast<double>(trials);
    const double var = trials > 1
        ? std::max(0.0, (sum_sq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1))
        : 0.0;
    out.distinct_stddev = std::sqrt(var);
    out.gaps = gaps.mean();
    return out;
}

std::pair<double, double> random_baseline_distinct(std::int32_t n, std::int32_t r,
                                                   std::int64_t trials, RunRng& rng) {
    const BaselineStats stats = random_baseline(n, r, trials, rng);
    return {stats.distinct_mean, stats.distinct_stddev};
}

std::vector<ScatterRecord> scatter_snapshot(const AgentLexicon& a, const AgentLexicon& b) {
    std::vector<ScatterRecord> out;
    out.reserve(static_cast<std::size_t>(a.object_count() + b.object_count()));
    const AgentLexicon* agents[2] = {&a, &b};
    for (std::int32_t agent = 0; agent < 2; ++agent) {
        const AgentLexicon& lex = *agents[agent];
        for (std::int32_t k = 0; k < lex.object_count(); ++k) {
            const Inventory& inv = lex.inventory(k);
            ScatterRecord rec{agent, k, inv.top_entry().word, std::nullopt};
            if (const auto second = inv.second_entry()) rec.second = second->word;
            out.push_back(rec);
        }
    }
    return out;
}

std::optional<double> diagonal_fraction(std::span<const ScatterRecord> records,
                                        std::int32_t threshold) {
    std::int64_t pairs = 0;
    std::int64_t close = 0;
    for (const ScatterRecord& rec : records) {
        if (!rec.second) continue;
        ++pairs;
        if (std::abs(rec.top - *rec.second) <= threshold) ++close;
    }
    if (pairs == 0) return std::nullopt;
    return static_cast<double>(close) / static_cast<double>(pairs);
}

double random_pair_diagonal_expectation(std::int32_t r, std::int32_t threshold) {
    if (r < 2) throw std::invalid_argument("random_pair_diagonal_expectation: need r >= 2");
    const std::int64_t amax = std::min<std::int64_t>(threshold, r - 1);
    std::int64_t hits = 0;
    for (std::int64_t d = 1; d <= amax; ++d) hits += 2 * (r - d);
    const auto total = static_cast<std::int64_t>(r) * (r - 1);
    return static_cast<double>(hits) / static_cast<double>(total);
}

} // namespace ng
