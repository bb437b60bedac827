#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litrev/cache.hpp"

namespace litrev {

struct HttpResponse {
    int status = 0;
    std::string body;
};

using HeaderList = std::vector<std::pair<std::string, std::string>>;

// Outbound HTTP abstraction. Every attempt bumps request_count(), which is
// how tests assert that cached reruns stay off the network.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;

    virtual HttpResponse get(const std::string& url) = 0;
    virtual HttpResponse post(const std::string& url, const std::string& body,
                              const std::string& content_type, const HeaderList& headers) = 0;

    long request_count() const { return requests_.load(); }

protected:
    void bump() { requests_.fetch_add(1); }

private:
    std::atomic<long> requests_{0};
};

// Real network transport backed by cpp-httplib. Understands http:// and
// https:// URLs and follows redirects.
class HttplibTransport : public HttpTransport {
public:
    explicit HttplibTransport(int timeout_seconds = 60) : timeout_seconds_(timeout_seconds) {}

    HttpResponse get(const std::string& url) override;
    HttpResponse post(const std::string& url, const std::string& body,
                      const std::string& content_type, const HeaderList& headers) override;

private:
    int timeout_seconds_;
};

// Serves canned responses from a fixture directory instead of the network.
// The directory holds manifest.json: a list of rules
//   {"method": "GET", "match": "<url substring>", "body_match": "<optional
//    request-body substring>", "status": 200, "body": "..."} or
//   {..., "body_file": "relative/path"}
// The first matching rule wins; an unmatched request is an error.
class FixtureTransport : public HttpTransport {
public:
    explicit FixtureTransport(const std::filesystem::path& fixture_dir);

    HttpResponse get(const std::string& url) override;
    HttpResponse post(const std::string& url, const std::string& body,
                      const std::string& content_type, const HeaderList& headers) override;

private:
    struct Rule {
        std::string method;
        std::string match;
        std::string body_match;
        int status = 200;
        std::string body;
    };

    HttpResponse serve(const std::string& method, const std::string& url,
                       const std::string& body);

    std::vector<Rule> rules_;
};

struct RetryPolicy {
    int max_attempts = 3;
    int backoff_ms = 200; // doubles per retry
};

// Cache-first HTTP client shared by the arXiv, LLM, and embedding clients.
// Responses are stored under cache/<stage>/<cache_key(stage, method+url+body)>
// so identical reruns never touch the transport. In offline mode a cache
// miss without a transport (fixtures count as a transport) raises OfflineMiss.
class CachingHttpClient {
public:
    CachingHttpClient(std::shared_ptr<HttpTransport> transport, Cache cache, bool offline,
                      RetryPolicy retry = {}, int delay_ms = 0)
        : transport_(std::move(transport)),
          cache_(std::move(cache)),
          offline_(offline),
          retry_(retry),
          delay_ms_(delay_ms) {}

    std::string get(std::string_view stage, const std::string& url);
    std::string post(std::string_view stage, const std::string& url, const std::string& body,
                     const std::string& content_type, const HeaderList& headers = {});

    const Cache& cache() const { return cache_; }

private:
    std::string fetch(std::string_view stage, const std::string& method, const std::string& url,
                      const std::string& body, const std::string& content_type,
                      const HeaderList& headers);
    HttpResponse attempt_with_retries(const std::string& method, const std::string& url,
                                      const std::string& body, const std::string& content_type,
                                      const HeaderList& headers);

    std::shared_ptr<HttpTransport> transport_;
    Cache cache_;
    bool offline_;
    RetryPolicy retry_;
    int delay_ms_;
    long long last_request_ms_ = -1;
};

} // namespace litrev
