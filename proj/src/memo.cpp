#include "severi/memo.hpp"

#include <algorithm>
#include <mutex>

namespace severi {

std::optional<BigInt> MemoStore::find(const std::string& key) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) {
        return std::nullopt;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
}

BigInt MemoStore::insert(const std::string& key, const BigInt& value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.try_emplace(key, value);
    if (inserted) {
        fresh_.insert(key);
    }
    return it->second;
}

void MemoStore::preload(const std::string& key, const BigInt& value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.try_emplace(key, value);
    if (!inserted && it->second != value) {
        throw CacheConflict(key);
    }
    if (inserted) {
        preloaded_.fetch_add(1, std::memory_order_relaxed);
    }
}

std::vector<std::pair<std::string, BigInt>> MemoStore::fresh_records() const
{
    std::shared_lock lock(mutex_);
    std::vector<std::pair<std::string, BigInt>> out;
    out.reserve(fresh_.size());
    for (const auto& key : fresh_) {
        out.emplace_back(key, values_.at(key));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t MemoStore::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

MemoStats MemoStore::stats() const
{
    return MemoStats{expansions_.load(), hits_.load(), preloaded_.load()};
}

} // namespace severi
