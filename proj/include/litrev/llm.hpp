#pragma once

#include <string>
#include <string_view>

#include "litrev/http.hpp"

namespace litrev {

enum class FinishState { complete, truncated, refused };

struct LlmRequest {
    std::string model_id;
    std::string prompt;
    std::string response_format_hint; // e.g. "json"; empty for free text
};

struct LlmResponse {
    std::string raw_text; // kept verbatim for audit
    FinishState finish_state = FinishState::complete;
};

class LlmClient {
public:
    virtual ~LlmClient() = default;

    // `stage` names the cache subdirectory the transcript lands in.
    virtual LlmResponse complete(std::string_view stage, const LlmRequest& request) = 0;
};

// Talks to a chat-completion-style HTTPS endpoint. Request and response
// bodies go through the caching client, so every transcript is replayable
// in offline mode.
class HttpLlmClient : public LlmClient {
public:
    HttpLlmClient(CachingHttpClient http, std::string endpoint, std::string api_key)
        : http_(std::move(http)), endpoint_(std::move(endpoint)), api_key_(std::move(api_key)) {}

    LlmResponse complete(std::string_view stage, const LlmRequest& request) override;

private:
    CachingHttpClient http_;
    std::string endpoint_;
    std::string api_key_;
};

// Serializes an LlmRequest to the chat-completion wire format. Exposed so
// tests can pre-seed transcript caches with the exact bytes the client sends.
std::string llm_request_body(const LlmRequest& request);

} // namespace litrev
