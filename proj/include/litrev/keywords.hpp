#pragma once

#include <string>
#include <vector>

#include "litrev/config.hpp"
#include "litrev/llm.hpp"
#include "litrev/types.hpp"

namespace litrev {

struct KeywordSet {
    std::vector<std::string> keywords; // kept in the order the model ranked them
};

// Pulls keyword candidates out of free-form model output. Accepts numbered
// lists, bulleted lists, and comma-separated lines; strips numbering,
// bullets, surrounding quotes, and whitespace; drops empties and
// case-insensitive duplicates, keeping the first occurrence. Never throws;
// count enforcement is the caller's job.
std::vector<std::string> parse_keyword_response(const std::string& raw);

// Asks the LLM for search keywords. Retries once with an explicit count
// reminder when fewer than config.keyword_min items parse, then throws
// InsufficientKeywords. Lists longer than config.keyword_max are clamped to
// the first keyword_max items.
KeywordSet generate_keywords(const InputQuery& query, LlmClient& llm,
                             const PipelineConfig& config);

} // namespace litrev
