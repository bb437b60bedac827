#include "litrev/cache.hpp"

#include <openssl/evp.h>

#include "litrev/util.hpp"

namespace litrev {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0x0f]);
    }
    return out;
}

std::string cache_key(std::string_view stage, std::string_view payload) {
    std::string material;
    material.reserve(stage.size() + 1 + payload.size());
    material.append(stage);
    material.push_back('\0');
    material.append(payload);
    return sha256_hex(material);
}

std::optional<std::string> Cache::get(std::string_view stage, const std::string& key) const {
    if (root_.empty()) return std::nullopt;
    auto path = root_ / stage / key;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    return util::read_file(path);
}

void Cache::put(std::string_view stage, const std::string& key, std::string_view bytes) const {
    if (root_.empty()) return;
    util::write_file(root_ / stage / key, bytes);
}

} // namespace litrev
