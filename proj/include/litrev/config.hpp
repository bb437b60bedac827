#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace litrev {

struct PipelineConfig {
    int keyword_min = 5;
    int keyword_max = 10;
    int max_per_keyword = 20;
    double iqr_multiplier = 0.5;
    std::string provider_id = "minilm";
    std::string llm_model_id = "gemini-2.0-flash";
    int request_delay_ms = 3000;
    std::filesystem::path output_dir = "out";
    std::filesystem::path cache_dir = "cache";

    std::string arxiv_api_url = "https://export.arxiv.org/api/query";
    std::string embedding_api_url; // EMBEDDING_API_URL
    std::string llm_api_url;       // LLM_API_URL
    std::string llm_api_key;       // LLM_API_KEY, environment only
    bool offline = false;
    std::filesystem::path fixture_dir; // optional canned responses for offline runs
};

// CLI-level settings; unset fields fall through to the next layer.
struct ConfigOverrides {
    std::optional<int> keyword_min;
    std::optional<int> keyword_max;
    std::optional<int> max_per_keyword;
    std::optional<double> iqr_multiplier;
    std::optional<std::string> provider_id;
    std::optional<std::string> llm_model_id;
    std::optional<int> request_delay_ms;
    std::optional<std::string> output_dir;
    std::optional<std::string> cache_dir;
    std::optional<std::string> arxiv_api_url;
    std::optional<bool> offline;
    std::optional<std::string> fixture_dir;
};

// Layered configuration: CLI flag > environment variable > config file >
// default. `env` is a snapshot of the process environment; API keys are
// accepted from it only, never from the file.
PipelineConfig load_config(const std::optional<std::filesystem::path>& file,
                           const std::map<std::string, std::string>& env,
                           const ConfigOverrides& overrides);

// Throws ConfigInvalid when an invariant is broken.
void validate_config(const PipelineConfig& config);

std::map<std::string, std::string> environment_snapshot();

} // namespace litrev
