#pragma once

#include "natrob/lm/ngram_model.hpp"

#include <unordered_map>

namespace natrob::lm {

using Key = std::vector<TokenId>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (TokenId id : k) {
            h ^= id;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Counts following one context at one order.
struct ContextStats {
    std::uint64_t total = 0;
    /// Number of followers with count 1, 2, and 3 or more.
    std::array<std::uint64_t, 3> bands{};
    std::unordered_map<TokenId, std::uint32_t> counts;
};

struct Level {
    Discounts discounts{0.5, 1.0, 1.5};
    std::unordered_map<Key, ContextStats, KeyHash> contexts;
};

struct NgramModel::Impl {
    int order = 4;
    std::uint64_t min_count = 1;
    Vocabulary vocab;
    /// levels[k - 1] holds order k; its keys have k - 1 ids.
    std::vector<Level> levels;

    /// Recomputes totals and band sizes from the raw tables.
    void finalize_stats();
};

/// Modified-KN discounts from count-of-counts n1..n4; bands that are
/// undefined or fall outside (0, band) use 0.5, 1.0, 1.5. D = band happens
/// when the next count-of-count is zero and would zero out every n-gram in
/// that band.
Discounts estimate_discounts(const std::array<std::uint64_t, 4>& count_of_counts);

}  // namespace natrob::lm
