#include "litrev/config.hpp"

#include <json.hpp>

#include "litrev/errors.hpp"
#include "litrev/util.hpp"

extern char** environ;

namespace litrev {

namespace {

void apply_file(PipelineConfig& config, const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(util::read_file(path));
    } catch (const std::exception& e) {
        throw ConfigInvalid("file", std::string(path.string()) + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigInvalid("file", path.string() + ": top level must be an object");
    }
    for (const auto& [field, value] : j.items()) {
        try {
            if (field == "keyword_min") config.keyword_min = value.get<int>();
            else if (field == "keyword_max") config.keyword_max = value.get<int>();
            else if (field == "max_per_keyword") config.max_per_keyword = value.get<int>();
            else if (field == "iqr_multiplier") config.iqr_multiplier = value.get<double>();
            else if (field == "provider_id") config.provider_id = value.get<std::string>();
            else if (field == "llm_model_id") config.llm_model_id = value.get<std::string>();
            else if (field == "request_delay_ms") config.request_delay_ms = value.get<int>();
            else if (field == "output_dir") config.output_dir = value.get<std::string>();
            else if (field == "cache_dir") config.cache_dir = value.get<std::string>();
            else if (field == "arxiv_api_url") config.arxiv_api_url = value.get<std::string>();
            else if (field == "embedding_api_url") config.embedding_api_url = value.get<std::string>();
            else if (field == "llm_api_url") config.llm_api_url = value.get<std::string>();
            else if (field == "llm_api_key")
                throw ConfigInvalid("llm_api_key", "secrets are accepted only via environment");
            else throw ConfigInvalid(field, "unknown config field");
        } catch (const ConfigInvalid&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigInvalid(field, "bad value: " + value.dump());
        }
    }
}

int env_int(const std::string& name, const std::string& raw) {
    auto v = util::parse_int(raw);
    if (!v) throw ConfigInvalid(name, "not an integer: '" + raw + "'");
    return *v;
}

double env_double(const std::string& name, const std::string& raw) {
    auto v = util::parse_double(raw);
    if (!v) throw ConfigInvalid(name, "not a number: '" + raw + "'");
    return *v;
}

void apply_env(PipelineConfig& config, const std::map<std::string, std::string>& env) {
    auto lookup = [&](const char* name) -> std::optional<std::string> {
        auto it = env.find(name);
        if (it == env.end()) return std::nullopt;
        return it->second;
    };
    if (auto v = lookup("LITREV_KEYWORD_MIN")) config.keyword_min = env_int("keyword_min", *v);
    if (auto v = lookup("LITREV_KEYWORD_MAX")) config.keyword_max = env_int("keyword_max", *v);
    if (auto v = lookup("LITREV_MAX_PER_KEYWORD"))
        config.max_per_keyword = env_int("max_per_keyword", *v);
    if (auto v = lookup("LITREV_IQR_MULTIPLIER"))
        config.iqr_multiplier = env_double("iqr_multiplier", *v);
    if (auto v = lookup("LITREV_PROVIDER")) config.provider_id = *v;
    if (auto v = lookup("LITREV_LLM_MODEL")) config.llm_model_id = *v;
    if (auto v = lookup("LITREV_REQUEST_DELAY_MS"))
        config.request_delay_ms = env_int("request_delay_ms", *v);
    if (auto v = lookup("LITREV_OUTPUT_DIR")) config.output_dir = *v;
    if (auto v = lookup("LITREV_CACHE_DIR")) config.cache_dir = *v;
    if (auto v = lookup("LITREV_ARXIV_API_URL")) config.arxiv_api_url = *v;
    if (auto v = lookup("EMBEDDING_API_URL")) config.embedding_api_url = *v;
    if (auto v = lookup("LLM_API_URL")) config.llm_api_url = *v;
    if (auto v = lookup("LLM_API_KEY")) config.llm_api_key = *v;
}

void apply_overrides(PipelineConfig& config, const ConfigOverrides& o) {
    if (o.keyword_min) config.keyword_min = *o.keyword_min;
    if (o.keyword_max) config.keyword_max = *o.keyword_max;
    if (o.max_per_keyword) config.max_per_keyword = *o.max_per_keyword;
    if (o.iqr_multiplier) config.iqr_multiplier = *o.iqr_multiplier;
    if (o.provider_id) config.provider_id = *o.provider_id;
    if (o.llm_model_id) config.llm_model_id = *o.llm_model_id;
    if (o.request_delay_ms) config.request_delay_ms = *o.request_delay_ms;
    if (o.output_dir) config.output_dir = *o.output_dir;
    if (o.cache_dir) config.cache_dir = *o.cache_dir;
    if (o.arxiv_api_url) config.arxiv_api_url = *o.arxiv_api_url;
    if (o.offline) config.offline = *o.offline;
    if (o.fixture_dir) config.fixture_dir = *o.fixture_dir;
}

} // namespace

void validate_config(const PipelineConfig& config) {
    if (config.keyword_min < 1) {
        throw ConfigInvalid("keyword_min", "must be >= 1, got " +
                                               std::to_string(config.keyword_min));
    }
    if (config.keyword_max < config.keyword_min) {
        throw ConfigInvalid("keyword_max",
                            "must be >= keyword_min, got " + std::to_string(config.keyword_max) +
                                " < " + std::to_string(config.keyword_min));
    }
    if (config.max_per_keyword < 1) {
        throw ConfigInvalid("max_per_keyword",
                            "must be >= 1, got " + std::to_string(config.max_per_keyword));
    }
    if (config.iqr_multiplier < 0) {
        throw ConfigInvalid("iqr_multiplier",
                            "must be >= 0, got " + util::format_double(config.iqr_multiplier));
    }
    if (config.request_delay_ms < 0) {
        throw ConfigInvalid("request_delay_ms",
                            "must be >= 0, got " + std::to_string(config.request_delay_ms));
    }
}

PipelineConfig load_config(const std::optional<std::filesystem::path>& file,
                           const std::map<std::string, std::string>& env,
                           const ConfigOverrides& overrides) {
    PipelineConfig config;
    if (file) {
        if (!std::filesystem::exists(*file)) {
            throw ConfigInvalid("file", "no such file: " + file->string());
        }
        apply_file(config, *file);
    }
    apply_env(config, env);
    apply_overrides(config, overrides);
    validate_config(config);
    return config;
}

std::map<std::string, std::string> environment_snapshot() {
    std::map<std::string, std::string> env;
    for (char** p = environ; p && *p; ++p) {
        std::string entry(*p);
        auto eq = entry.find('=');
        if (eq != std::string::npos) {
            env.emplace(entry.substr(0, eq), entry.substr(eq + 1));
        }
    }
    return env;
}

} // namespace litrev
