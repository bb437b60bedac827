#pragma once

#include <string>
#include <vector>

#include "litrev/config.hpp"
#include "litrev/http.hpp"
#include "litrev/types.hpp"

namespace litrev {

// Query URL for one keyword: quoted all-fields phrase search, single page
// from start=0.
std::string build_query(const std::string& keyword, int max_results,
                        const std::string& base_url = "https://export.arxiv.org/api/query");

// Modern "2401.01234" / "2401.1234" or legacy "math/0211159",
// "cs.DS/0211159" style identifiers.
bool is_valid_arxiv_id(const std::string& id);

// Splits an Atom entry identifier like "http://arxiv.org/abs/2401.01234v3"
// into the canonical id and version (1 when no suffix). Returns an empty id
// when no identifier can be recognized.
std::pair<std::string, int> split_arxiv_id(const std::string& entry_id);

// One PaperRecord per Atom <entry>; entries without a title are skipped with
// a warning. Throws FeedMalformed when the XML does not parse.
std::vector<PaperRecord> parse_atom_feed(const std::string& xml);

// Collapses duplicates: by canonical arxiv_id when present (highest version
// wins), else by case-folded whitespace-normalized title. source_keywords of
// merged records are unioned; first-occurrence order is preserved.
std::vector<PaperRecord> dedup(const std::vector<PaperRecord>& records);

// Fetches up to config.max_per_keyword records per keyword (feeds are cached
// raw under the "fetch" stage) and tags each record with its source keyword.
// No dedup here; the caller runs dedup() over the union.
std::vector<PaperRecord> fetch_keywords(const std::vector<std::string>& keywords,
                                        const PipelineConfig& config, CachingHttpClient& http);

} // namespace litrev
