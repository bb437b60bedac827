#include "litrev/types.hpp"

#include <stdexcept>

#include "litrev/util.hpp"

namespace litrev {

void validate_query(const InputQuery& query) {
    if (util::trim(query.title).empty()) {
        throw std::invalid_argument("query title is empty");
    }
    if (util::trim(query.abstract).empty()) {
        throw std::invalid_argument("query abstract is empty");
    }
}

void to_json(nlohmann::json& j, const PaperRecord& r) {
    j = nlohmann::json{
        {"arxiv_id", r.arxiv_id},
        {"version", r.version},
        {"title", r.title},
        {"abstract", r.abstract},
        {"authors", r.authors},
        {"published", r.published},
        {"pdf_url", r.pdf_url},
        {"source_keywords", r.source_keywords},
    };
}

void from_json(const nlohmann::json& j, PaperRecord& r) {
    j.at("arxiv_id").get_to(r.arxiv_id);
    j.at("version").get_to(r.version);
    j.at("title").get_to(r.title);
    j.at("abstract").get_to(r.abstract);
    j.at("authors").get_to(r.authors);
    j.at("published").get_to(r.published);
    j.at("pdf_url").get_to(r.pdf_url);
    j.at("source_keywords").get_to(r.source_keywords);
}

std::string query_text(const InputQuery& query) {
    return util::trim(query.title) + "\n" + util::trim(query.abstract);
}

std::string paper_text(const PaperRecord& record) {
    return util::trim(record.title) + "\n" + util::trim(record.abstract);
}

} // namespace litrev
