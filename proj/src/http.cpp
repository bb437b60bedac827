#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "litrev/http.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "litrev/errors.hpp"
#include "litrev/util.hpp"

namespace litrev {

namespace {

// Splits an absolute URL into "scheme://host[:port]" and "/path?query".
std::pair<std::string, std::string> split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw TransportError("not an absolute URL: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

long long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

} // namespace

HttpResponse HttplibTransport::get(const std::string& url) {
    bump();
    auto [origin, path] = split_url(url);
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_seconds_);
    client.set_read_timeout(timeout_seconds_);
    auto res = client.Get(path);
    if (!res) {
        throw TransportError("GET " + url + " failed: " + httplib::to_string(res.error()));
    }
    return {res->status, res->body};
}

HttpResponse HttplibTransport::post(const std::string& url, const std::string& body,
                                    const std::string& content_type, const HeaderList& headers) {
    bump();
    auto [origin, path] = split_url(url);
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_seconds_);
    client.set_read_timeout(timeout_seconds_);
    httplib::Headers hl;
    for (const auto& [k, v] : headers) hl.emplace(k, v);
    auto res = client.Post(path, hl, body, content_type);
    if (!res) {
        throw TransportError("POST " + url + " failed: " + httplib::to_string(res.error()));
    }
    return {res->status, res->body};
}

FixtureTransport::FixtureTransport(const std::filesystem::path& fixture_dir) {
    auto manifest_path = fixture_dir / "manifest.json";
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(util::read_file(manifest_path));
    } catch (const std::exception& e) {
        throw TransportError("cannot load fixture manifest " + manifest_path.string() + ": " +
                             e.what());
    }
    for (const auto& item : manifest) {
        Rule rule;
        rule.method = item.value("method", "GET");
        rule.match = item.value("match", "");
        rule.body_match = item.value("body_match", "");
        rule.status = item.value("status", 200);
        if (item.contains("body_file")) {
            rule.body = util::read_file(fixture_dir / item.at("body_file").get<std::string>());
        } else {
            rule.body = item.value("body", "");
        }
        rules_.push_back(std::move(rule));
    }
}

HttpResponse FixtureTransport::serve(const std::string& method, const std::string& url,
                                     const std::string& body) {
    bump();
    for (const auto& rule : rules_) {
        if (rule.method != method) continue;
        if (!rule.match.empty() && url.find(rule.match) == std::string::npos) continue;
        if (!rule.body_match.empty() && body.find(rule.body_match) == std::string::npos) continue;
        return {rule.status, rule.body};
    }
    throw TransportError("no fixture rule matches " + method + " " + url);
}

HttpResponse FixtureTransport::get(const std::string& url) {
    return serve("GET", url, "");
}

HttpResponse FixtureTransport::post(const std::string& url, const std::string& body,
                                    const std::string&, const HeaderList&) {
    return serve("POST", url, body);
}

std::string CachingHttpClient::get(std::string_view stage, const std::string& url) {
    return fetch(stage, "GET", url, "", "", {});
}

std::string CachingHttpClient::post(std::string_view stage, const std::string& url,
                                    const std::string& body, const std::string& content_type,
                                    const HeaderList& headers) {
    return fetch(stage, "POST", url, body, content_type, headers);
}

std::string CachingHttpClient::fetch(std::string_view stage, const std::string& method,
                                     const std::string& url, const std::string& body,
                                     const std::string& content_type, const HeaderList& headers) {
    // Auth headers stay out of the key so cached transcripts replay without
    // the secret present.
    const std::string key = cache_key(stage, method + "\n" + url + "\n" + body);
    if (auto hit = cache_.get(stage, key)) {
        return *hit;
    }
    if (!transport_) {
        throw OfflineMiss("offline mode: no cached response for " + method + " " + url);
    }
    if (delay_ms_ > 0) {
        long long now = now_ms();
        if (last_request_ms_ >= 0 && now - last_request_ms_ < delay_ms_) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(delay_ms_ - (now - last_request_ms_)));
        }
    }
    HttpResponse res = attempt_with_retries(method, url, body, content_type, headers);
    last_request_ms_ = now_ms();
    if (res.status < 200 || res.status >= 300) {
        throw TransportError(method + " " + url + " returned HTTP " + std::to_string(res.status));
    }
    cache_.put(stage, key, res.body);
    return res.body;
}

HttpResponse CachingHttpClient::attempt_with_retries(const std::string& method,
                                                     const std::string& url,
                                                     const std::string& body,
                                                     const std::string& content_type,
                                                     const HeaderList& headers) {
    int backoff = retry_.backoff_ms;
    for (int attempt = 1;; ++attempt) {
        try {
            HttpResponse res = method == "GET"
                                   ? transport_->get(url)
                                   : transport_->post(url, body, content_type, headers);
            // 5xx is retryable; anything else is for the caller to judge.
            if (res.status < 500 || attempt >= retry_.max_attempts) {
                return res;
            }
            spdlog::warn("{} {} -> HTTP {} (attempt {}/{})", method, url, res.status, attempt,
                         retry_.max_attempts);
        } catch (const TransportError& e) {
            if (attempt >= retry_.max_attempts) throw;
            spdlog::warn("{} {} failed (attempt {}/{}): {}", method, url, attempt,
                         retry_.max_attempts, e.what());
        }
        if (backoff > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
    }
}

} // namespace litrev
