#include <cmath>

#include "litrev/embedding.hpp"
#include "litrev/errors.hpp"

namespace litrev {

bool EmbeddingVector::is_zero() const {
    for (double v : values) {
        if (v != 0.0) return false;
    }
    return true;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    size_t current_cps = 0;

    auto flush = [&] {
        if (current_cps >= 2) tokens.push_back(current);
        current.clear();
        current_cps = 0;
    };

    for (size_t i = 0; i < text.size();) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            if (std::isalnum(c)) {
                current.push_back(static_cast<char>(std::tolower(c)));
                ++current_cps;
            } else {
                flush();
            }
            ++i;
        } else {
            // Multibyte UTF-8 sequence: kept verbatim, counted as one codepoint.
            size_t len = (c >= 0xf0) ? 4 : (c >= 0xe0) ? 3 : 2;
            len = std::min(len, text.size() - i);
            current.append(text, i, len);
            ++current_cps;
            i += len;
        }
    }
    flush();
    return tokens;
}

TfidfModel fit_tfidf(const std::vector<std::string>& corpus) {
    if (corpus.empty()) {
        throw EmptyCorpus("cannot fit tf-idf on an empty corpus");
    }
    TfidfModel model;
    model.n_docs = static_cast<int>(corpus.size());
    for (const auto& doc : corpus) {
        std::map<std::string, int> seen;
        for (const auto& term : tokenize(doc)) {
            seen[term] = 1;
        }
        for (const auto& [term, _] : seen) {
            model.doc_freq[term] += 1;
        }
    }
    size_t index = 0;
    for (const auto& [term, _] : model.doc_freq) {
        model.vocabulary.emplace(term, index++);
    }
    return model;
}

EmbeddingVector tfidf_transform(const TfidfModel& model, const std::string& doc) {
    EmbeddingVector vec;
    vec.values.assign(model.vocabulary.size(), 0.0);

    std::map<std::string, int> counts;
    for (const auto& term : tokenize(doc)) {
        counts[term] += 1;
    }
    for (const auto& [term, tf] : counts) {
        auto it = model.vocabulary.find(term);
        if (it == model.vocabulary.end()) continue;
        double idf = std::log((1.0 + model.n_docs) / (1.0 + model.doc_freq.at(term))) + 1.0;
        vec.values[it->second] = static_cast<double>(tf) * idf;
    }

    double norm_sq = 0.0;
    for (double v : vec.values) norm_sq += v * v;
    if (norm_sq > 0.0) {
        double norm = std::sqrt(norm_sq);
        for (double& v : vec.values) v /= norm;
    }
    return vec;
}

const std::string& TfidfProvider::id() const {
    static const std::string kId = "tfidf";
    return kId;
}

std::vector<EmbeddingVector> TfidfProvider::embed(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        out.push_back(tfidf_transform(model_, text));
    }
    return out;
}

} // namespace litrev
