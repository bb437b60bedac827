#pragma once

#include <string>
#include <vector>

#include "litrev/embedding.hpp"

namespace litrev {

struct ScoredPaper {
    std::string arxiv_id;
    double score = 0.0;

    bool operator==(const ScoredPaper&) const = default;
};

// Quartiles, IQR-based retention threshold, and skewness of a score
// distribution.
struct DistributionStats {
    size_t n = 0;
    double min = 0.0;
    double max = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double threshold = 0.0; // q3 + multiplier * iqr
    double skewness = 0.0;
    double multiplier = 0.0;
};

// dot(a,b) / (|a||b|), clamped to [-1, 1] against rounding. Throws
// DimensionMismatch / ZeroVector.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

// Sorted-position quantile with linear interpolation at p*(n-1).
double quantile(const std::vector<double>& sorted_values, double p);

// Quartiles by linear interpolation on (n-1)-scaled positions; skewness is
// the population Fisher-Pearson g1 = m3 / m2^1.5 (0 when m2 = 0). Throws
// EmptyScores when n = 0.
DistributionStats compute_stats(const std::vector<double>& scores, double multiplier);

// Entries with score >= stats.threshold, sorted by descending score, ties by
// ascending arxiv_id. The comparison is inclusive so the maximum always
// survives when iqr = 0.
std::vector<ScoredPaper> filter_by_threshold(const std::vector<ScoredPaper>& scored,
                                             const DistributionStats& stats);

// Cosine of each candidate against the query vector, in candidate order.
// Zero-vector candidates score 0 with a warning instead of aborting the run;
// a zero query vector still raises.
std::vector<ScoredPaper> score_candidates(const EmbeddingVector& query_vec,
                                          const std::vector<std::string>& candidate_ids,
                                          const std::vector<EmbeddingVector>& candidate_vecs);

} // namespace litrev
