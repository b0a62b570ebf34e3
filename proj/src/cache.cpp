#include "severi/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "severi/errors.hpp"
#include "severi/severi_plane.hpp"
#include "severi/severi_quadric.hpp"

namespace severi {

namespace {

bool decimal_digits(const std::string& text)
{
    return !text.empty() && text.find_first_not_of("0123456789") == std::string::npos &&
           (text.size() == 1 || text[0] != '0');
}

// Closes the descriptor and drops the lock on every exit path.
class LockedFile {
public:
    LockedFile(const std::filesystem::path& path, int flags, int lock)
    {
        fd_ = ::open(path.c_str(), flags, 0644);
        if (fd_ < 0) {
            throw DomainError("cannot open cache file " + path.string() + ": " + std::strerror(errno));
        }
        if (::flock(fd_, lock) != 0) {
            ::close(fd_);
            throw DomainError("cannot lock cache file " + path.string());
        }
    }
    ~LockedFile()
    {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;

    int fd() const { return fd_; }

private:
    int fd_ = -1;
};

} // namespace

bool valid_cache_key(const std::string& key)
{
    try {
        if (key.starts_with("p2|")) {
            const PlaneKey k = PlaneKey::parse_canonical(key);
            point_count_plane(k);
            return k.d >= 1 && k.delta >= 0;
        }
        if (key.starts_with("f0|")) {
            const QuadricKey k = QuadricKey::parse_canonical(key);
            point_count_quadric(k);
            return k.m >= 0 && k.n >= 0 && k.delta >= 0;
        }
    } catch (const DomainError&) {
    }
    return false;
}

CacheFile::CacheFile(const std::filesystem::path& dir) : path_(dir / "severi-cache.jsonl")
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw DomainError("cannot create cache directory " + dir.string() + ": " + ec.message());
    }
}

std::size_t CacheFile::load(MemoStore& memo, std::ostream& warnings) const
{
    if (!std::filesystem::exists(path_)) {
        return 0;
    }
    // A shared lock keeps a concurrent append from being read half-written.
    LockedFile lock(path_, O_RDONLY, LOCK_SH);
    std::ifstream in(path_);
    std::string line;
    std::size_t line_no = 0;
    std::size_t accepted = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto skip = [&](const std::string& why) {
            warnings << "warning: " << path_.string() << ":" << line_no << ": skipping corrupted record ("
                     << why << ")\n";
        };
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            skip("not a JSON object");
            continue;
        }
        if (!j.contains("key") || !j.contains("value") || !j["key"].is_string() || !j["value"].is_string()) {
            skip("missing key or value");
            continue;
        }
        const std::string key = j["key"].get<std::string>();
        const std::string value = j["value"].get<std::string>();
        if (!valid_cache_key(key)) {
            skip("invalid key");
            continue;
        }
        if (!decimal_digits(value)) {
            skip("value is not a non-negative integer");
            continue;
        }
        memo.preload(key, BigInt(value));
        ++accepted;
    }
    return accepted;
}

std::size_t CacheFile::append_fresh(const MemoStore& memo) const
{
    const auto records = memo.fresh_records();
    if (records.empty()) {
        return 0;
    }
    std::string payload;
    for (const auto& [key, value] : records) {
        nlohmann::ordered_json j;
        j["key"] = key;
        j["value"] = to_decimal(value);
        payload += j.dump();
        payload += '\n';
    }
    LockedFile lock(path_, O_WRONLY | O_APPEND | O_CREAT, LOCK_EX);
    const char* data = payload.data();
    std::size_t left = payload.size();
    while (left > 0) {
        const ssize_t n = ::write(lock.fd(), data, left);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw DomainError("cannot write cache file " + path_.string() + ": " + std::strerror(errno));
        }
        data += n;
        left -= static_cast<std::size_t>(n);
    }
    return records.size();
}

} // namespace severi
