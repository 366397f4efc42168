#include "ng/lexicon.hpp"

#include <stdexcept>

namespace ng {

Inventory::Inventory(std::int32_t capacity) : capacity_(capacity) {
    if (capacity < 1) throw std::invalid_argument("Inventory: capacity must be >= 1");
    words_.resize(static_cast<std::size_t>(capacity));
    weights_.resize(static_cast<std::size_t>(capacity));
}

std::int32_t Inventory::find(Word x) const {
    for (std::int32_t i = 0; i < count_; ++i)
        if (words_[i] == x) return i;
    return -1;
}

LexEntry Inventory::top_entry() const {
    if (count_ == 0) throw std::logic_error("top_entry: empty inventory");
    LexEntry best = entry(0);
    for (std::int32_t i = 1; i < count_; ++i) {
        const LexEntry e = entry(i);
        if (entry_precedes(e, best)) best = e;
    }
    return best;
}

std::optional<LexEntry> Inventory::second_entry() const {
    if (count_ < 2) return std::nullopt;
    LexEntry best = entry(0);
    LexEntry second = entry(1);
    if (entry_precedes(second, best)) std::swap(best, second);
    for (std::int32_t i = 2; i < count_; ++i) {
        const LexEntry e = entry(i);
        if (entry_precedes(e, best)) {
            second = best;
            best = e;
        } else if (entry_precedes(e, second)) {
            second = e;
        }
    }
    return second;
}

std::int32_t Inventory::rank_of(Word x) const {
    const std::int32_t pos = find(x);
    if (pos < 0) throw std::logic_error("rank_of: word not stored");
    const LexEntry target = entry(pos);
    std::int32_t rank = 1;
    for (std::int32_t i = 0; i < count_; ++i)
        if (entry_precedes(entry(i), target)) ++rank;
    return rank;
}

void Inventory::reinforce(Word x, std::int32_t delta) {
    if (delta != 1 && delta != -1) throw std::logic_error("reinforce: delta must be +1 or -1");
    const std::int32_t i = find(x);
    if (i < 0) throw std::logic_error("reinforce: word not stored (use add_word)");
    weights_[i] += delta;
    weight_sum_ += delta;
    if (weights_[i] <= 0) remove_slot(i);
}

void Inventory::add_word(Word x) {
    if (contains(x)) throw std::logic_error("add_word: word already stored");
    if (count_ == capacity_) {
        std::int32_t victim = 0;
        for (std::int32_t i = 1; i < count_; ++i) {
            const bool lighter = weights_[i] < weights_[victim] ||
                                 (weights_[i] == weights_[victim] && words_[i] < words_[victim]);
            if (lighter) victim = i;
        }
        remove_slot(victim);
    }
    words_[count_] = x;
    weights_[count_] = 1;
    ++count_;
    weight_sum_ += 1;
}

void Inventory::reseed(Word x) {
    words_[0] = x;
    weights_[0] = 1;
    count_ = 1;
    weight_sum_ = 1;
}

void Inventory::remove_slot(std::int32_t i) {
    weight_sum_ -= weights_[i];
    for (std::int32_t j = i + 1; j < count_; ++j) {
        words_[j - 1] = words_[j];
        weights_[j - 1] = weights_[j];
    }
    --count_;
}

AgentLexicon::AgentLexicon(std::int32_t object_count, std::int32_t capacity) {
    if (object_count < 1) throw std::invalid_argument("AgentLexicon: need at least one object");
    inventories_.reserve(static_cast<std::size_t>(object_count));
    for (std::int32_t k = 0; k < object_count; ++k) inventories_.emplace_back(capacity);
}

void AgentLexicon::fill_views(std::vector<kernels::InventoryView>& out) const {
    out.resize(inventories_.size());
    for (std::size_t k = 0; k < inventories_.size(); ++k) out[k] = inventories_[k].view();
}

} // namespace ng
