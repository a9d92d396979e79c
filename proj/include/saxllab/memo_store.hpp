#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "saxllab/partition.hpp"

namespace saxllab {

/// Memo key for a (lambda, alpha) pair: parts of lambda, a 0 separator, parts of alpha.
using MemoKey = std::u16string;

inline MemoKey memo_key(std::span<const int> lambda, std::span<const int> alpha)
{
    MemoKey key;
    key.reserve(lambda.size() + alpha.size() + 1);
    for (int p : lambda)
        key.push_back(static_cast<char16_t>(p));
    key.push_back(u'\0');
    for (int p : alpha)
        key.push_back(static_cast<char16_t>(p));
    return key;
}

inline std::pair<Partition, Partition> split_memo_key(const MemoKey& key)
{
    auto sep = key.find(u'\0');
    if (sep == MemoKey::npos)
        throw std::invalid_argument("memo key without separator");
    std::vector<int> lambda;
    std::vector<int> alpha;
    for (std::size_t i = 0; i < sep; ++i)
        lambda.push_back(key[i]);
    for (std::size_t i = sep + 1; i < key.size(); ++i)
        alpha.push_back(key[i]);
    return {Partition(std::move(lambda)), Partition(std::move(alpha))};
}

/// Thread-safe memo table with idempotent insertion.
///
/// Concurrent workers may compute the same entry twice; the second insert
/// must carry the identical value, otherwise std::logic_error is thrown.
template <class Value>
class MemoStore {
public:
    explicit MemoStore(std::size_t shard_count = 64) : shards_(shard_count) {}

    MemoStore(const MemoStore&) = delete;
    MemoStore& operator=(const MemoStore&) = delete;

    std::optional<Value> find(const MemoKey& key) const
    {
        const Shard& shard = shard_for(key);
        std::shared_lock lock(shard.mutex);
        auto it = shard.map.find(key);
        if (it == shard.map.end()) {
            misses_.fetch_add(1, std::memory_order_relaxed);
            return std::nullopt;
        }
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    void insert(const MemoKey& key, const Value& value)
    {
        Shard& shard = shard_for(key);
        std::unique_lock lock(shard.mutex);
        auto [it, inserted] = shard.map.try_emplace(key, value);
        if (!inserted && !(it->second == value))
            throw std::logic_error("memo store: divergent value for an existing key");
    }

    /// Inserts unless present; returns false (leaving the table unchanged) on a conflict.
    bool try_insert(const MemoKey& key, const Value& value)
    {
        Shard& shard = shard_for(key);
        std::unique_lock lock(shard.mutex);
        auto [it, inserted] = shard.map.try_emplace(key, value);
        return inserted || it->second == value;
    }

    [[nodiscard]] std::size_t size() const
    {
        std::size_t total = 0;
        for (const auto& shard : shards_) {
            std::shared_lock lock(shard.mutex);
            total += shard.map.size();
        }
        return total;
    }

    [[nodiscard]] std::uint64_t hits() const noexcept { return hits_.load(); }
    [[nodiscard]] std::uint64_t misses() const noexcept { return misses_.load(); }

    /// Rough resident size, used for memory-limit hints.
    [[nodiscard]] std::size_t approx_bytes() const { return size() * 160; }

    void clear()
    {
        for (auto& shard : shards_) {
            std::unique_lock lock(shard.mutex);
            shard.map.clear();
        }
        hits_ = 0;
        misses_ = 0;
    }

    /// All entries, sorted by key for reproducible serialization.
    [[nodiscard]] std::vector<std::pair<MemoKey, Value>> snapshot() const
    {
        std::vector<std::pair<MemoKey, Value>> out;
        for (const auto& shard : shards_) {
            std::shared_lock lock(shard.mutex);
            out.insert(out.end(), shard.map.begin(), shard.map.end());
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<MemoKey, Value> map;
    };

    Shard& shard_for(const MemoKey& key) { return shards_[std::hash<MemoKey>{}(key) % shards_.size()]; }
    const Shard& shard_for(const MemoKey& key) const
    {
        return shards_[std::hash<MemoKey>{}(key) % shards_.size()];
    }

    std::vector<Shard> shards_;
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
};

} // namespace saxllab
