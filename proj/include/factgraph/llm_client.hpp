#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <string>

namespace factgraph {

struct LLMClientConfig {
    std::string base_url = "http://127.0.0.1:8080";
    std::string path = "/v1/chat/completions";
    std::string model = "triplet-extractor";
    double temperature = 0.0;
    // Credentials are only ever read from this environment variable.
    std::string api_key_env = "FACTGRAPH_API_KEY";
    int timeout_seconds = 60;
    int max_attempts = 3;        // 1 initial try + 2 retries
    int backoff_base_ms = 1000;  // 1s, 2s, 4s
    int max_in_flight = 4;
};

class LLMClient {
public:
    virtual ~LLMClient() = default;
    // Returns the model's message content for a single prompt.
    // Throws TransportError after retries are exhausted.
    virtual std::string complete(const std::string& prompt) = 0;
};

// Chat-completion-style HTTP client. Safe to call from multiple threads;
// concurrent requests are capped at max_in_flight and each request carries a
// correlation id (X-Correlation-Id header, echoed in error messages).
class HttpChatClient final : public LLMClient {
public:
    explicit HttpChatClient(LLMClientConfig config);

    std::string complete(const std::string& prompt) override;

    std::uint64_t requests_sent() const { return requests_sent_.load(); }

private:
    LLMClientConfig config_;
    std::string api_key_;
    std::mutex mutex_;
    std::condition_variable slot_free_;
    int in_flight_ = 0;
    std::atomic<std::uint64_t> next_correlation_{1};
    std::atomic<std::uint64_t> requests_sent_{0};
};

}  // namespace factgraph
