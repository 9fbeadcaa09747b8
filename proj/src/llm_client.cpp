#include "factgraph/llm_client.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "factgraph/errors.hpp"

namespace factgraph {

namespace {

using nlohmann::json;

bool status_is_retryable(int status) {
    return status == 408 || status == 429 || status >= 500;
}

// Pulls the message content out of a chat-completion-style body. Falls back
// to the raw body so that unparseable responses surface to the triplet
// parser (which records them as malformed spans) instead of failing here.
std::string extract_content(const std::string& body) {
    json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) return body;
    if (parsed.contains("choices") && parsed["choices"].is_array() &&
        !parsed["choices"].empty()) {
        const json& first = parsed["choices"][0];
        if (first.contains("message") && first["message"].contains("content") &&
            first["message"]["content"].is_string()) {
            return first["message"]["content"].get<std::string>();
        }
        if (first.contains("text") && first["text"].is_string()) {
            return first["text"].get<std::string>();
        }
    }
    if (parsed.contains("content") && parsed["content"].is_string()) {
        return parsed["content"].get<std::string>();
    }
    return body;
}

class InFlightSlot {
public:
    InFlightSlot(std::mutex& mutex, std::condition_variable& cv, int& counter, int limit)
        : mutex_(mutex), cv_(cv), counter_(counter) {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return counter_ < limit; });
        ++counter_;
    }
    ~InFlightSlot() {
        {
            std::lock_guard lock(mutex_);
            --counter_;
        }
        cv_.notify_one();
    }

private:
    std::mutex& mutex_;
    std::condition_variable& cv_;
    int& counter_;
};

}  // namespace

HttpChatClient::HttpChatClient(LLMClientConfig config) : config_(std::move(config)) {
    if (!config_.api_key_env.empty()) {
        if (const char* key = std::getenv(config_.api_key_env.c_str())) api_key_ = key;
    }
}

std::string HttpChatClient::complete(const std::string& prompt) {
    const std::uint64_t correlation = next_correlation_.fetch_add(1);
    InFlightSlot slot(mutex_, slot_free_, in_flight_, config_.max_in_flight);

    json body = {
        {"model", config_.model},
        {"temperature", config_.temperature},
        {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
    };
    const std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(config_.timeout_seconds, 0);
        client.set_read_timeout(config_.timeout_seconds, 0);
        client.set_write_timeout(config_.timeout_seconds, 0);

        httplib::Headers headers = {{"X-Correlation-Id", std::to_string(correlation)}};
        if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

        requests_sent_.fetch_add(1);
        httplib::Result res = client.Post(config_.path, headers, payload, "application/json");

        if (res && res->status == 200) return extract_content(res->body);

        if (res) {
            last_error = "HTTP status " + std::to_string(res->status);
            if (!status_is_retryable(res->status)) {
                throw TransportError("llm request " + std::to_string(correlation) + " failed: " +
                                         last_error,
                                     attempt);
            }
        } else {
            last_error = "connection error: " + httplib::to_string(res.error());
        }
        if (attempt < config_.max_attempts) {
            const auto delay =
                std::chrono::milliseconds(std::int64_t(config_.backoff_base_ms) << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
    }
    throw TransportError("llm request " + std::to_string(correlation) + " failed after " +
                             std::to_string(config_.max_attempts) + " attempts: " + last_error,
                         config_.max_attempts);
}

}  // namespace factgraph
