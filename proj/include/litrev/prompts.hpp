#pragma once

#include <map>
#include <string>
#include <string_view>

namespace litrev::prompts {

// Prompt templates live under assets/prompts/ and are embedded at build
// time. Placeholders look like {{name}}.
extern const std::string_view kVersion;
extern const std::string_view kKeywords;
extern const std::string_view kKeywordsRetry;
extern const std::string_view kSummary;
extern const std::string_view kSummaryRepair;
extern const std::string_view kIntent;
extern const std::string_view kContribution;
extern const std::string_view kReview;
extern const std::string_view kReviewRepair;

std::string render(std::string_view tmpl, const std::map<std::string, std::string>& values);

} // namespace litrev::prompts
