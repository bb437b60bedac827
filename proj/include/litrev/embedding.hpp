#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "litrev/http.hpp"
#include "litrev/types.hpp"

namespace litrev {

struct EmbeddingVector {
    std::vector<double> values;

    size_t dim() const { return values.size(); }
    bool is_zero() const;
};

// Classical tf-idf statistics over a fitted corpus. Immutable after fit and
// safe to share.
struct TfidfModel {
    std::map<std::string, size_t> vocabulary; // term -> column index
    std::map<std::string, int> doc_freq;      // term -> number of docs containing it
    int n_docs = 0;
};

struct ProviderDescriptor {
    std::string provider_id; // tfidf | minilm | specter2 | remote-custom
    std::optional<std::string> endpoint;
    std::optional<size_t> expected_dim;
};

// Lowercased word extraction: runs of letters/digits (any non-ASCII
// codepoint counts as a letter), at least two codepoints long. No stemming,
// no stop words.
std::vector<std::string> tokenize(const std::string& text);

// Throws EmptyCorpus when the corpus has no documents at all.
TfidfModel fit_tfidf(const std::vector<std::string>& corpus);

// weight(term) = tf(term, doc) * (ln((1 + n_docs) / (1 + doc_freq(term))) + 1)
// with raw-count tf; the result is L2-normalized when nonzero. Terms outside
// the vocabulary are ignored, so an all-unknown document yields the zero
// vector (the cosine layer raises on it).
EmbeddingVector tfidf_transform(const TfidfModel& model, const std::string& doc);

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    virtual const std::string& id() const = 0;

    // One vector per input text, in input order.
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
};

class TfidfProvider : public EmbeddingProvider {
public:
    explicit TfidfProvider(TfidfModel model) : model_(std::move(model)) {}

    const std::string& id() const override;
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

    const TfidfModel& model() const { return model_; }

private:
    TfidfModel model_;
};

// Client for an embedding service speaking JSON {"texts": [...]} in,
// {"vectors": [[...], ...]} out. One in-flight request per call; responses
// are cached under the "embed" stage.
class RemoteEmbeddingProvider : public EmbeddingProvider {
public:
    RemoteEmbeddingProvider(ProviderDescriptor descriptor, CachingHttpClient http);

    const std::string& id() const override;
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

private:
    ProviderDescriptor descriptor_;
    CachingHttpClient http_;
};

std::vector<EmbeddingVector> embed_remote(const ProviderDescriptor& descriptor,
                                          const std::vector<std::string>& texts,
                                          CachingHttpClient& http);

// Maps a provider id to its descriptor. Remote providers take their endpoint
// from `embedding_api_url`; minilm additionally pins the 384 dimension.
ProviderDescriptor descriptor_for(const std::string& provider_id,
                                  const std::string& embedding_api_url);

// Builds a ready-to-use provider. The tf-idf provider is fitted on
// `fit_corpus` (the texts about to be embedded); remote providers ignore it.
std::unique_ptr<EmbeddingProvider> make_provider(const ProviderDescriptor& descriptor,
                                                 const std::vector<std::string>& fit_corpus,
                                                 CachingHttpClient& http);

} // namespace litrev
