#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "factgraph/linalg.hpp"

namespace factgraph {

struct EmbeddingConfig {
    enum Kind { HashedBagOfTokens, RemoteEncoder };
    Kind kind = HashedBagOfTokens;
    int dim = 64;
    std::uint64_t seed = 42;  // hashed provider only

    // Remote encoder settings (same conventions as the LLM client).
    std::string base_url = "http://127.0.0.1:8080";
    std::string path = "/v1/embeddings";
    std::string model = "text-encoder";
    std::string api_key_env = "FACTGRAPH_API_KEY";
    int timeout_seconds = 60;
    int max_attempts = 3;
    int backoff_base_ms = 1000;

    // Stable identity string used in cache keys and report provenance.
    std::string fingerprint() const;
};

// Maps text to a fixed-dimension, L2-normalized feature vector. Same text
// always yields the same vector within one configuration; empty or
// token-free text yields the zero vector.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual Vec embed(std::string_view text) const = 0;
    int dim() const { return dim_; }

protected:
    explicit EmbeddingProvider(int dim) : dim_(dim) {}

private:
    int dim_;
};

// Seeded feature hashing: lowercase, split on non-alphanumerics, hash each
// token with 64-bit FNV-1a XOR seed, bucket = hash mod dim, sign from bit 63
// (set -> -1), accumulate, L2-normalize. Pure and thread-safe.
class HashedEmbedding final : public EmbeddingProvider {
public:
    HashedEmbedding(int dim, std::uint64_t seed);
    Vec embed(std::string_view text) const override;

private:
    std::uint64_t seed_;
};

// HTTP embedding endpoint; the service mean-pools, we L2-normalize locally.
class RemoteEmbedding final : public EmbeddingProvider {
public:
    explicit RemoteEmbedding(EmbeddingConfig config);
    Vec embed(std::string_view text) const override;

private:
    EmbeddingConfig config_;
    std::string api_key_;
};

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingConfig& config);

}  // namespace factgraph
