#include "factgraph/embedding.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "factgraph/errors.hpp"
#include "factgraph/text.hpp"

namespace factgraph {

namespace {
using nlohmann::json;
}

std::string EmbeddingConfig::fingerprint() const {
    if (kind == HashedBagOfTokens) {
        return "hashed:dim=" + std::to_string(dim) + ":seed=" + std::to_string(seed);
    }
    return "remote:dim=" + std::to_string(dim) + ":model=" + model + ":url=" + base_url + path;
}

HashedEmbedding::HashedEmbedding(int dim, std::uint64_t seed)
    : EmbeddingProvider(dim), seed_(seed) {
    if (dim <= 0) throw InvalidInputError("HashedEmbedding: dim must be positive");
}

Vec HashedEmbedding::embed(std::string_view input) const {
    Vec v = Vec::Zero(dim());
    for (const std::string& token : text::tokenize(input)) {
        const std::uint64_t h = text::fnv1a64(token) ^ seed_;
        const int bucket = int(h % std::uint64_t(dim()));
        const double sign = (h >> 63) ? -1.0 : 1.0;
        v[bucket] += sign;
    }
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
    return v;
}

RemoteEmbedding::RemoteEmbedding(EmbeddingConfig config)
    : EmbeddingProvider(config.dim), config_(std::move(config)) {
    if (config_.dim <= 0) throw InvalidInputError("RemoteEmbedding: dim must be positive");
    if (!config_.api_key_env.empty()) {
        if (const char* key = std::getenv(config_.api_key_env.c_str())) api_key_ = key;
    }
}

Vec RemoteEmbedding::embed(std::string_view input) const {
    if (input.empty()) return Vec::Zero(dim());

    json body = {{"model", config_.model}, {"input", std::string(input)}};
    const std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(config_.timeout_seconds, 0);
        client.set_read_timeout(config_.timeout_seconds, 0);

        httplib::Headers headers;
        if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
        httplib::Result res = client.Post(config_.path, headers, payload, "application/json");

        if (res && res->status == 200) {
            json parsed = json::parse(res->body, nullptr, false);
            const json* values = nullptr;
            if (!parsed.is_discarded()) {
                if (parsed.contains("embedding") && parsed["embedding"].is_array()) {
                    values = &parsed["embedding"];
                } else if (parsed.contains("data") && parsed["data"].is_array() &&
                           !parsed["data"].empty() && parsed["data"][0].contains("embedding")) {
                    values = &parsed["data"][0]["embedding"];
                }
            }
            if (values == nullptr || int(values->size()) != dim()) {
                throw TransportError("embedding endpoint returned an unusable body", attempt);
            }
            Vec v(dim());
            for (int i = 0; i < dim(); ++i) v[i] = (*values)[i].get<double>();
            const double norm = v.norm();
            if (norm > 0.0) v /= norm;
            return v;
        }
        if (res) {
            last_error = "HTTP status " + std::to_string(res->status);
            if (res->status < 500 && res->status != 408 && res->status != 429) {
                throw TransportError("embedding request failed: " + last_error, attempt);
            }
        } else {
            last_error = "connection error: " + httplib::to_string(res.error());
        }
        if (attempt < config_.max_attempts) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(std::int64_t(config_.backoff_base_ms) << (attempt - 1)));
        }
    }
    throw TransportError("embedding request failed after " + std::to_string(config_.max_attempts) +
                             " attempts: " + last_error,
                         config_.max_attempts);
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingConfig& config) {
    if (config.kind == EmbeddingConfig::HashedBagOfTokens) {
        return std::make_unique<HashedEmbedding>(config.dim, config.seed);
    }
    return std::make_unique<RemoteEmbedding>(config);
}

}  // namespace factgraph
