#include "litrev/filter.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

#include "litrev/errors.hpp"

namespace litrev {

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("cosine of vectors with dims " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    }
    double dot = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (size_t i = 0; i < a.dim(); ++i) {
        dot += a.values[i] * b.values[i];
        norm_a += a.values[i] * a.values[i];
        norm_b += b.values[i] * b.values[i];
    }
    if (norm_a == 0.0 || norm_b == 0.0) {
        throw ZeroVector("cosine of a zero vector is undefined");
    }
    return std::clamp(dot / (std::sqrt(norm_a) * std::sqrt(norm_b)), -1.0, 1.0);
}

double quantile(const std::vector<double>& sorted_values, double p) {
    const size_t n = sorted_values.size();
    if (n == 1) return sorted_values[0];
    double pos = p * static_cast<double>(n - 1);
    size_t lo = static_cast<size_t>(pos);
    if (lo >= n - 1) return sorted_values[n - 1];
    double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

DistributionStats compute_stats(const std::vector<double>& scores, double multiplier) {
    if (scores.empty()) {
        throw EmptyScores("cannot compute stats of an empty score multiset");
    }
    for (double s : scores) {
        if (!std::isfinite(s)) {
            throw std::invalid_argument("scores must be finite");
        }
    }
    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());

    DistributionStats stats;
    stats.n = sorted.size();
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.q1 = quantile(sorted, 0.25);
    stats.q3 = quantile(sorted, 0.75);
    stats.iqr = stats.q3 - stats.q1;
    stats.multiplier = multiplier;
    stats.threshold = stats.q3 + multiplier * stats.iqr;

    double mean = 0.0;
    for (double s : sorted) mean += s;
    mean /= static_cast<double>(stats.n);
    double m2 = 0.0;
    double m3 = 0.0;
    for (double s : sorted) {
        double d = s - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(stats.n);
    m3 /= static_cast<double>(stats.n);
    stats.skewness = m2 == 0.0 ? 0.0 : m3 / std::pow(m2, 1.5);
    return stats;
}

std::vector<ScoredPaper> filter_by_threshold(const std::vector<ScoredPaper>& scored,
                                             const DistributionStats& stats) {
    std::vector<ScoredPaper> retained;
    for (const auto& sp : scored) {
        if (sp.score >= stats.threshold) retained.push_back(sp);
    }
    std::sort(retained.begin(), retained.end(), [](const ScoredPaper& a, const ScoredPaper& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.arxiv_id < b.arxiv_id;
    });
    return retained;
}

std::vector<ScoredPaper> score_candidates(const EmbeddingVector& query_vec,
                                          const std::vector<std::string>& candidate_ids,
                                          const std::vector<EmbeddingVector>& candidate_vecs) {
    if (candidate_ids.size() != candidate_vecs.size()) {
        throw std::invalid_argument("candidate ids and vectors differ in length");
    }
    if (query_vec.is_zero()) {
        throw ZeroVector("query embedding is the zero vector");
    }
    std::vector<ScoredPaper> scored;
    scored.reserve(candidate_ids.size());
    for (size_t i = 0; i < candidate_ids.size(); ++i) {
        double score = 0.0;
        if (candidate_vecs[i].is_zero()) {
            spdlog::warn("candidate {} has a zero embedding; scoring it 0", candidate_ids[i]);
        } else {
            score = cosine(query_vec, candidate_vecs[i]);
        }
        scored.push_back({candidate_ids[i], score});
    }
    return scored;
}

} // namespace litrev
