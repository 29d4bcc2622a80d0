#pragma once
// Content-addressed JSON result cache. Entries carry a schema version and a
// payload hash; mismatched entries are ignored and recomputed, never
// migrated. Writes go through a temp file and an atomic rename.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "econe/io.hpp"

namespace econe {

inline constexpr int kCacheSchemaVersion = 1;

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<njson> get(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        auto path = entry_path(key);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        njson entry;
        try {
            in >> entry;
            if (entry.at("schema").get<int>() != kCacheSchemaVersion) return std::nullopt;
            if (entry.at("key").get<std::string>() != key) return std::nullopt;
            const njson& payload = entry.at("payload");
            if (entry.at("hash").get<std::string>() != hex64(fnv1a64(payload.dump())))
                return std::nullopt;
            return payload;
        } catch (...) {
            return std::nullopt;  // unreadable entries are treated as misses
        }
    }

    void put(const std::string& key, const njson& payload) const {
        if (!enabled()) return;
        std::filesystem::create_directories(dir_);
        njson entry{{"schema", kCacheSchemaVersion},
                    {"key", key},
                    {"payload", payload},
                    {"hash", hex64(fnv1a64(payload.dump()))}};
        auto path = entry_path(key);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << entry.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path);
    }

private:
    std::filesystem::path entry_path(const std::string& key) const {
        return std::filesystem::path(dir_) / (hex64(fnv1a64(key)) + ".json");
    }

    std::string dir_;
};

}  // namespace econe
