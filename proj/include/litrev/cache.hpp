#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace litrev {

// Content hash used to key cached stage artifacts: hex SHA-256 of
// stage || 0x00 || payload. Stable across processes and platforms.
std::string cache_key(std::string_view stage, std::string_view payload);

std::string sha256_hex(std::string_view bytes);

// On-disk cache, one subdirectory per pipeline stage, files named by
// cache_key. Values are raw bytes.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }

    std::optional<std::string> get(std::string_view stage, const std::string& key) const;
    void put(std::string_view stage, const std::string& key, std::string_view bytes) const;

private:
    std::filesystem::path root_;
};

} // namespace litrev
