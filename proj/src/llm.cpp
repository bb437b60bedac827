#include "litrev/llm.hpp"

#include <json.hpp>

#include "litrev/errors.hpp"

namespace litrev {

std::string llm_request_body(const LlmRequest& request) {
    nlohmann::json messages = nlohmann::json::array();
    if (!request.response_format_hint.empty()) {
        messages.push_back({{"role", "system"}, {"content", request.response_format_hint}});
    }
    messages.push_back({{"role", "user"}, {"content", request.prompt}});
    // nlohmann::json keeps object keys sorted, so this dump is canonical and
    // safe to use as cache-key material.
    return nlohmann::json{{"model", request.model_id}, {"messages", messages}}.dump();
}

LlmResponse HttpLlmClient::complete(std::string_view stage, const LlmRequest& request) {
    if (endpoint_.empty()) {
        throw LlmUnavailable("no LLM endpoint configured (set LLM_API_URL)");
    }
    HeaderList headers;
    if (!api_key_.empty()) {
        headers.emplace_back("Authorization", "Bearer " + api_key_);
    }
    std::string body;
    try {
        body = http_.post(stage, endpoint_, llm_request_body(request), "application/json",
                          headers);
    } catch (const std::exception& e) {
        throw LlmUnavailable(std::string("LLM request failed: ") + e.what());
    }

    try {
        auto j = nlohmann::json::parse(body);
        const auto& choice = j.at("choices").at(0);
        LlmResponse response;
        response.raw_text = choice.at("message").at("content").get<std::string>();
        std::string reason = choice.value("finish_reason", "stop");
        if (reason == "length") {
            response.finish_state = FinishState::truncated;
        } else if (reason == "content_filter" || reason == "refusal") {
            response.finish_state = FinishState::refused;
        }
        return response;
    } catch (const nlohmann::json::exception& e) {
        throw LlmUnavailable(std::string("malformed LLM response: ") + e.what());
    }
}

} // namespace litrev
