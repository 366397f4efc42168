#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ng/kernels/similarity.hpp"

namespace ng {

// A word is an integer code point in [1, r].
using Word = std::int32_t;

struct LexEntry {
    Word word;
    std::int32_t weight;

    bool operator==(const LexEntry&) const = default;
};

// Ordering used for top/second lookups and rank computation: larger weight
// first, ties broken by smaller word value.
constexpr bool entry_precedes(const LexEntry& a, const LexEntry& b) {
    return a.weight > b.weight || (a.weight == b.weight && a.word < b.word);
}

// Bounded multiset of weighted words for one object. Capacity is fixed at
// construction; every stored weight stays >= 1 (an entry whose weight drops
// to zero is removed). A word appears at most once.
//
// Storage is two parallel int32 arrays so the similarity kernels can consume
// an inventory directly.
class Inventory {
public:
    explicit Inventory(std::int32_t capacity);

    std::int32_t capacity() const { return capacity_; }
    std::int32_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool full() const { return count_ == capacity_; }
    std::int64_t weight_sum() const { return weight_sum_; }

    std::span<const Word> words() const { return {words_.data(), static_cast<std::size_t>(count_)}; }
    std::span<const std::int32_t> weights() const { return {weights_.data(), static_cast<std::size_t>(count_)}; }
    LexEntry entry(std::int32_t i) const { return {words_[i], weights_[i]}; }

    std::int32_t find(Word x) const;  // slot index, or -1
    bool contains(Word x) const { return find(x) >= 0; }

    // Entry with the largest weight (ties: smallest word). Inventory must be
    // non-empty.
    LexEntry top_entry() const;

    // Entry with the second-largest weight under the same ordering, absent
    // when fewer than two entries are stored.
    std::optional<LexEntry> second_entry() const;

    // 1-based rank of a stored word under the top/second ordering.
    std::int32_t rank_of(Word x) const;

    // Adds +1/-1 to the weight of a stored word; the entry is removed when
    // its weight reaches zero.
    void reinforce(Word x, std::int32_t delta);

    // Inserts a word that is not yet stored, with unit weight. A full
    // inventory first evicts its minimum-weight entry (ties: smallest word).
    void add_word(Word x);

    // Resets to the single entry (x, 1). Used for initialization and for the
    // engine's empty-inventory repair.
    void reseed(Word x);

    kernels::InventoryView view() const {
        return {words_.data(), weights_.data(), count_, weight_sum_};
    }

    // Live entries only; slots past count_ are scratch.
    friend bool operator==(const Inventory& a, const Inventory& b) {
        if (a.capacity_ != b.capacity_ || a.count_ != b.count_) return false;
        for (std::int32_t i = 0; i < a.count_; ++i)
            if (a.words_[i] != b.words_[i] || a.weights_[i] != b.weights_[i]) return false;
        return true;
    }

private:
    void remove_slot(std::int32_t i);

    std::vector<Word> words_;
    std::vector<std::int32_t> weights_;
    std::int32_t capacity_;
    std::int32_t count_ = 0;
    std::int64_t weight_sum_ = 0;
};

// One agent's full lexicon: one inventory per object, index permanently bound
// to the object. Objects are indexed 0..n-1.
class AgentLexicon {
public:
    AgentLexicon(std::int32_t object_count, std::int32_t capacity);

    std::int32_t object_count() const { return static_cast<std::int32_t>(inventories_.size()); }

    Inventory& inventory(std::int32_t object) { return inventories_[object]; }
    const Inventory& inventory(std::int32_t object) const { return inventories_[object]; }

    void fill_views(std::vector<kernels::InventoryView>& out) const;

    bool operator==(const AgentLexicon&) const = default;

private:
    std::vector<Inventory> inventories_;
};

} // namespace ng
