#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ng/dynamics.hpp"
#include "ng/lexicon.hpp"
#include "ng/rng.hpp"

namespace ng {

// Per-window accumulators for the communication observables. Rates are
// absent (not zero) when their denominator is empty.
struct MetricsWindow {
    std::int64_t attempts = 0;
    std::int64_t successes = 0;
    std::int64_t rank1_utterances = 0;
    std::int64_t rank1_successes = 0;
    std::int64_t rank2_utterances = 0;
    std::int64_t rank2_successes = 0;

    void add(const RoundOutcome& outcome);
    void reset() { *this = MetricsWindow{}; }

    std::optional<double> success_rate() const;
    std::optional<double> rank_fraction(int rank) const;
    std::optional<double> success_rate_by_rank(int rank) const;
};

// Number of different largest-weight words across the lexicon; the inverse
// homonymy measure. Always in [1, n].
std::int32_t distinct_top_words(const AgentLexicon& lex);

// Histogram of distances between neighbouring largest-weight words:
// counts[d] is the average number of sorted neighbour gaps equal to d.
// Per lexicon the histogram carries exactly n-1 gaps; d = 0 counts overlaps.
struct GapHistogram {
    std::map<std::int32_t, double> counts;
    std::int64_t sample_size = 0;

    double at(std::int32_t d) const;
};

GapHistogram gap_distribution(const AgentLexicon& lex);

// Fold of gap histograms into their mean, e.g. across runs and agents.
class GapAccumulator {
public:
    void add(const GapHistogram& h);
    GapHistogram mean() const;

private:
    std::map<std::int32_t, double> sums_;
    std::int64_t samples_ = 0;
};

// Expected number of distinct values among n uniform draws from [1, r]:
// r * (1 - (1 - 1/r)^n).
double closed_form_distinct(std::int64_t n, std::int64_t r);

struct BaselineStats {
    double distinct_mean = 0.0;
    double distinct_stddev = 0.0;
    GapHistogram gaps;
};

// Monte Carlo baseline: draw n words uniformly from [1, r], record the
// distinct count and the neighbour-gap histogram, average over trials.
BaselineStats random_baseline(std::int32_t n, std::int32_t r, std::int64_t trials, RunRng& rng);

// (mean, stddev) of the distinct count, same sampling as random_baseline.
std::pair<double, double> random_baseline_distinct(std::int32_t n, std::int32_t r,
                                                   std::int64_t trials, RunRng& rng);

// One record per (agent, object): the top word and, when the inventory holds
// at least two entries, the second word.
struct ScatterRecord {
    std::int32_t agent;  // 0 = A, 1 = B
    std::int32_t object;
    Word top;
    std::optional<Word> second;
};

std::vector<ScatterRecord> scatter_snapshot(const AgentLexicon& a, const AgentLexicon& b);

// Fraction of records with |top - second| <= threshold, among records whose
// second word exists. Absent when no record has a second word.
std::optional<double> diagonal_fraction(std::span<const ScatterRecord> records,
                                        std::int32_t threshold);

// P(|u - v| <= threshold) for a uniform random pair of distinct words in
// [1, r]; the no-accumulation reference for diagonal_fraction.
double random_pair_diagonal_expectation(std::int32_t r, std::int32_t threshold);

} // namespace ng
