#include "litrev/embedding.hpp"

#include <cmath>

#include <json.hpp>

#include "litrev/errors.hpp"

namespace litrev {

RemoteEmbeddingProvider::RemoteEmbeddingProvider(ProviderDescriptor descriptor,
                                                 CachingHttpClient http)
    : descriptor_(std::move(descriptor)), http_(std::move(http)) {
    if (!descriptor_.endpoint || descriptor_.endpoint->empty()) {
        throw ConfigInvalid("embedding_api_url",
                            "remote provider '" + descriptor_.provider_id +
                                "' needs an endpoint (set EMBEDDING_API_URL)");
    }
}

const std::string& RemoteEmbeddingProvider::id() const {
    return descriptor_.provider_id;
}

std::vector<EmbeddingVector> RemoteEmbeddingProvider::embed(
    const std::vector<std::string>& texts) {
    return embed_remote(descriptor_, texts, http_);
}

std::vector<EmbeddingVector> embed_remote(const ProviderDescriptor& descriptor,
                                          const std::vector<std::string>& texts,
                                          CachingHttpClient& http) {
    if (texts.empty()) {
        throw std::invalid_argument("embed_remote called with no texts");
    }
    if (!descriptor.endpoint || descriptor.endpoint->empty()) {
        throw ProviderUnavailable("provider '" + descriptor.provider_id + "' has no endpoint");
    }

    nlohmann::json request{{"texts", texts}};
    std::string body;
    try {
        body = http.post("embed", *descriptor.endpoint, request.dump(), "application/json");
    } catch (const std::exception& e) {
        throw ProviderUnavailable("provider '" + descriptor.provider_id +
                                  "' unreachable: " + e.what());
    }

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw ProviderUnavailable("provider '" + descriptor.provider_id +
                                  "' returned malformed JSON: " + e.what());
    }
    if (!parsed.contains("vectors") || !parsed["vectors"].is_array()) {
        throw ProviderUnavailable("provider '" + descriptor.provider_id +
                                  "' response has no \"vectors\" array");
    }
    const auto& vectors = parsed["vectors"];
    if (vectors.size() != texts.size()) {
        throw PartialResponse("asked for " + std::to_string(texts.size()) + " embeddings, got " +
                              std::to_string(vectors.size()));
    }

    std::vector<EmbeddingVector> out;
    out.reserve(vectors.size());
    for (const auto& row : vectors) {
        EmbeddingVector vec;
        try {
            vec.values = row.get<std::vector<double>>();
        } catch (const nlohmann::json::exception&) {
            throw ProviderUnavailable("provider '" + descriptor.provider_id +
                                      "' returned a non-numeric vector");
        }
        if (vec.values.empty()) {
            throw DimensionMismatch("provider '" + descriptor.provider_id +
                                    "' returned an empty vector");
        }
        for (double v : vec.values) {
            if (!std::isfinite(v)) {
                throw ProviderUnavailable("provider '" + descriptor.provider_id +
                                          "' returned a non-finite value");
            }
        }
        if (descriptor.expected_dim && vec.dim() != *descriptor.expected_dim) {
            throw DimensionMismatch("provider '" + descriptor.provider_id + "' declared dim " +
                                    std::to_string(*descriptor.expected_dim) + " but returned " +
                                    std::to_string(vec.dim()));
        }
        out.push_back(std::move(vec));
    }
    return out;
}

ProviderDescriptor descriptor_for(const std::string& provider_id,
                                  const std::string& embedding_api_url) {
    if (provider_id == "tfidf") {
        return {provider_id, std::nullopt, std::nullopt};
    }
    if (provider_id == "minilm") {
        return {provider_id, embedding_api_url, 384};
    }
    if (provider_id == "specter2" || provider_id == "remote-custom") {
        return {provider_id, embedding_api_url, std::nullopt};
    }
    throw ConfigInvalid("provider_id", "unknown provider '" + provider_id + "'");
}

std::unique_ptr<EmbeddingProvider> make_provider(const ProviderDescriptor& descriptor,
                                                 const std::vector<std::string>& fit_corpus,
                                                 CachingHttpClient& http) {
    if (descriptor.provider_id == "tfidf") {
        return std::make_unique<TfidfProvider>(fit_tfidf(fit_corpus));
    }
    return std::make_unique<RemoteEmbeddingProvider>(descriptor, http);
}

} // namespace litrev
