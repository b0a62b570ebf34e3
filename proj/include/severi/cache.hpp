#pragma once

// Persistent memo cache: <dir>/severi-cache.jsonl, one {"key","value"} record
// per line, append-only. Appends from concurrent processes are serialized by
// an advisory lock on the file.

#include <filesystem>
#include <ostream>

#include "severi/memo.hpp"

namespace severi {

class CacheFile {
public:
    explicit CacheFile(const std::filesystem::path& dir);

    const std::filesystem::path& path() const { return path_; }

    /// Preloads every valid record into the memo. Malformed lines are skipped
    /// with a warning; two records for one key with different values throw
    /// CacheConflict. Returns the number of accepted lines.
    std::size_t load(MemoStore& memo, std::ostream& warnings) const;

    // Appends the memo's fresh records; returns how many were written.
    std::size_t append_fresh(const MemoStore& memo) const;

private:
    std::filesystem::path path_;
};

// True if the key parses as a canonical plane or quadric state.
bool valid_cache_key(const std::string& key);

} // namespace severi
