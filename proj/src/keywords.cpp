#include "litrev/keywords.hpp"

#include <cctype>

#include <spdlog/spdlog.h>

#include "litrev/errors.hpp"
#include "litrev/prompts.hpp"
#include "litrev/util.hpp"

namespace litrev {

namespace {

// Strips "1." / "23)" / "-" / "*" / "•" list prefixes. Returns whether a
// prefix was removed so comma-splitting can be limited to plain lines.
std::pair<std::string, bool> strip_list_prefix(const std::string& line) {
    std::string s = util::trim(line);
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) {
        return {util::trim(s.substr(i + 1)), true};
    }
    if (!s.empty() && (s[0] == '-' || s[0] == '*')) {
        return {util::trim(s.substr(1)), true};
    }
    // UTF-8 bullet
    if (s.rfind("\xe2\x80\xa2", 0) == 0) {
        return {util::trim(s.substr(3)), true};
    }
    return {s, false};
}

std::string strip_quotes(std::string s) {
    while (s.size() >= 2) {
        char a = s.front();
        char b = s.back();
        if ((a == '"' && b == '"') || (a == '\'' && b == '\'') || (a == '`' && b == '`')) {
            s = util::trim(s.substr(1, s.size() - 2));
        } else {
            break;
        }
    }
    return s;
}

} // namespace

std::vector<std::string> parse_keyword_response(const std::string& raw) {
    std::vector<std::string> items;
    for (const auto& line : util::split_lines(raw)) {
        auto [stripped, had_prefix] = strip_list_prefix(line);
        if (!had_prefix && stripped.find(',') != std::string::npos) {
            for (const auto& part : util::split(stripped, ',')) {
                items.push_back(part);
            }
        } else {
            items.push_back(stripped);
        }
    }

    std::vector<std::string> out;
    std::vector<std::string> seen;
    for (const auto& item : items) {
        std::string cleaned = strip_quotes(util::trim(item));
        if (cleaned.empty()) continue;
        std::string folded = util::to_lower_ascii(cleaned);
        bool dup = false;
        for (const auto& f : seen) {
            if (f == folded) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        seen.push_back(folded);
        out.push_back(cleaned);
    }
    return out;
}

KeywordSet generate_keywords(const InputQuery& query, LlmClient& llm,
                             const PipelineConfig& config) {
    validate_query(query);

    const std::map<std::string, std::string> values = {
        {"min", std::to_string(config.keyword_min)},
        {"max", std::to_string(config.keyword_max)},
        {"title", query.title},
        {"abstract", query.abstract},
    };
    std::string prompt = prompts::render(prompts::kKeywords, values);

    std::vector<std::string> parsed;
    for (int attempt = 0; attempt < 2; ++attempt) {
        LlmRequest request{config.llm_model_id, prompt, ""};
        LlmResponse response = llm.complete("keywords", request);
        parsed = parse_keyword_response(response.raw_text);
        if (static_cast<int>(parsed.size()) >= config.keyword_min) break;
        spdlog::warn("keyword generation returned {} items, need at least {}", parsed.size(),
                     config.keyword_min);
        prompt += prompts::render(prompts::kKeywordsRetry, values);
    }
    if (static_cast<int>(parsed.size()) < config.keyword_min) {
        throw InsufficientKeywords("got " + std::to_string(parsed.size()) +
                                   " keywords after retry, need at least " +
                                   std::to_string(config.keyword_min));
    }
    if (static_cast<int>(parsed.size()) > config.keyword_max) {
        parsed.resize(static_cast<size_t>(config.keyword_max));
    }
    return KeywordSet{std::move(parsed)};
}

} // namespace litrev
