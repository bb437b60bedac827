#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace litrev {

// Title and abstract of the paper the review is being built for.
struct InputQuery {
    std::string title;
    std::string abstract;
};

// Throws std::invalid_argument when title or abstract is empty after trimming.
void validate_query(const InputQuery& query);

// One fetched arXiv paper. arxiv_id is canonical (version suffix stripped),
// e.g. "2401.01234" or legacy "math/0211159".
struct PaperRecord {
    std::string arxiv_id;
    int version = 1;
    std::string title;
    std::string abstract;
    std::vector<std::string> authors;
    std::string published; // UTC timestamp as returned by the feed
    std::string pdf_url;
    std::set<std::string> source_keywords;

    bool operator==(const PaperRecord&) const = default;
};

void to_json(nlohmann::json& j, const PaperRecord& r);
void from_json(const nlohmann::json& j, PaperRecord& r);

// Text handed to embedding providers: trimmed title, newline, trimmed
// abstract. The same rule applies to the input query and to candidates.
std::string query_text(const InputQuery& query);
std::string paper_text(const PaperRecord& record);

} // namespace litrev
