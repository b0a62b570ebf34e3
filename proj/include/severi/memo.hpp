#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "severi/exactmath.hpp"

namespace severi {

struct MemoStats {
    std::uint64_t expansions = 0;   // states evaluated by recursion
    std::uint64_t hits = 0;         // lookups answered from the store
    std::uint64_t preloaded = 0;    // records accepted from a cache file
};

/// Shared memo of recursion values keyed by canonical key strings such as
/// "p2|3|1||3". Lookups take a shared lock; insertion is first-writer-wins,
/// which is safe because every key has exactly one correct value.
class MemoStore {
public:
    std::optional<BigInt> find(const std::string& key) const;

    // Returns the stored value (the earlier one if another writer won).
    BigInt insert(const std::string& key, const BigInt& value);

    // Loads a record from a cache file. Throws CacheConflict if the key is
    // already present with a different value.
    void preload(const std::string& key, const BigInt& value);

    // Records added by insert() (not by preload), sorted by key.
    std::vector<std::pair<std::string, BigInt>> fresh_records() const;

    std::size_t size() const;
    MemoStats stats() const;
    void count_expansion() { expansions_.fetch_add(1, std::memory_order_relaxed); }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, BigInt> values_;
    std::unordered_set<std::string> fresh_;
    mutable std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> expansions_{0};
    std::atomic<std::uint64_t> preloaded_{0};
};

} // namespace severi
