#include "litrev/arxiv.hpp"

#include <cctype>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <spdlog/spdlog.h>

#include "litrev/errors.hpp"
#include "litrev/util.hpp"

namespace litrev {

namespace {

namespace pt = boost::property_tree;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

std::string build_query(const std::string& keyword, int max_results,
                        const std::string& base_url) {
    if (util::trim(keyword).empty()) {
        throw std::invalid_argument("keyword is empty");
    }
    if (max_results < 1) {
        throw std::invalid_argument("max_results must be >= 1");
    }
    // The phrase is quoted so multi-word keywords search as a unit.
    return base_url + "?search_query=all:%22" + util::url_encode(keyword) +
           "%22&start=0&max_results=" + std::to_string(max_results);
}

bool is_valid_arxiv_id(const std::string& id) {
    auto dot = id.find('.');
    auto slash = id.find('/');
    if (slash == std::string::npos) {
        // Modern: 4 digits, dot, 4-5 digits.
        if (dot == std::string::npos) return false;
        std::string_view major = std::string_view(id).substr(0, dot);
        std::string_view minor = std::string_view(id).substr(dot + 1);
        return major.size() == 4 && all_digits(major) &&
               (minor.size() == 4 || minor.size() == 5) && all_digits(minor);
    }
    // Legacy: archive name (letters, optional .XX subject class) / 7 digits.
    std::string_view archive = std::string_view(id).substr(0, slash);
    std::string_view number = std::string_view(id).substr(slash + 1);
    if (archive.empty() || number.size() != 7 || !all_digits(number)) return false;
    for (char c : archive) {
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '-' && c != '.') return false;
    }
    return true;
}

std::pair<std::string, int> split_arxiv_id(const std::string& entry_id) {
    std::string id = util::trim(entry_id);
    auto abs_pos = id.find("/abs/");
    if (abs_pos != std::string::npos) {
        id = id.substr(abs_pos + 5);
    }
    int version = 1;
    auto v_pos = id.rfind('v');
    if (v_pos != std::string::npos && v_pos + 1 < id.size() &&
        all_digits(std::string_view(id).substr(v_pos + 1))) {
        version = std::stoi(id.substr(v_pos + 1));
        id = id.substr(0, v_pos);
    }
    if (!is_valid_arxiv_id(id)) {
        return {"", version};
    }
    return {id, version};
}

std::vector<PaperRecord> parse_atom_feed(const std::string& xml) {
    pt::ptree tree;
    std::istringstream stream(xml);
    try {
        pt::read_xml(stream, tree);
    } catch (const pt::xml_parser_error& e) {
        throw FeedMalformed(std::string("Atom feed does not parse: ") + e.what());
    }

    auto feed = tree.get_child_optional("feed");
    if (!feed) {
        throw FeedMalformed("Atom feed has no <feed> root element");
    }

    std::vector<PaperRecord> records;
    int skipped = 0;
    for (const auto& [name, entry] : *feed) {
        if (name != "entry") continue;

        PaperRecord record;
        record.title = util::collapse_whitespace(entry.get<std::string>("title", ""));
        if (record.title.empty()) {
            ++skipped;
            continue;
        }
        auto [id, version] = split_arxiv_id(entry.get<std::string>("id", ""));
        if (id.empty()) {
            spdlog::warn("entry '{}' has no recognizable arXiv id", record.title);
        }
        record.arxiv_id = id;
        record.version = version;
        record.abstract = util::collapse_whitespace(entry.get<std::string>("summary", ""));
        record.published = util::trim(entry.get<std::string>("published", ""));
        for (const auto& [child_name, child] : entry) {
            if (child_name == "author") {
                auto author = util::collapse_whitespace(child.get<std::string>("name", ""));
                if (!author.empty()) record.authors.push_back(author);
            } else if (child_name == "link") {
                if (child.get<std::string>("<xmlattr>.type", "") == "application/pdf") {
                    record.pdf_url = child.get<std::string>("<xmlattr>.href", "");
                }
            }
        }
        records.push_back(std::move(record));
    }
    if (skipped > 0) {
        spdlog::warn("skipped {} feed entries without a title", skipped);
    }
    return records;
}

std::vector<PaperRecord> dedup(const std::vector<PaperRecord>& records) {
    std::vector<PaperRecord> out;
    std::map<std::string, size_t> by_key; // "id:..." or "title:..."

    for (const auto& record : records) {
        std::string key = !record.arxiv_id.empty()
                              ? "id:" + record.arxiv_id
                              : "title:" + util::to_lower_ascii(
                                               util::collapse_whitespace(record.title));
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            by_key.emplace(std::move(key), out.size());
            out.push_back(record);
            continue;
        }
        PaperRecord& kept = out[it->second];
        auto merged_keywords = kept.source_keywords;
        merged_keywords.insert(record.source_keywords.begin(), record.source_keywords.end());
        if (record.version > kept.version) {
            kept = record;
        }
        kept.source_keywords = std::move(merged_keywords);
    }
    return out;
}

std::vector<PaperRecord> fetch_keywords(const std::vector<std::string>& keywords,
                                        const PipelineConfig& config, CachingHttpClient& http) {
    std::vector<PaperRecord> all;
    for (const auto& keyword : keywords) {
        std::string url = build_query(keyword, config.max_per_keyword, config.arxiv_api_url);
        spdlog::info("fetching up to {} papers for '{}'", config.max_per_keyword, keyword);
        std::string xml = http.get("fetch", url);
        auto records = parse_atom_feed(xml);
        if (records.size() > static_cast<size_t>(config.max_per_keyword)) {
            records.resize(static_cast<size_t>(config.max_per_keyword));
        }
        for (auto& record : records) {
            record.source_keywords = {keyword};
            all.push_back(std::move(record));
        }
    }
    return all;
}

} // namespace litrev
