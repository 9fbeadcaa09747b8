#pragma once

#include <string>
#include <vector>

#include "factgraph/embedding.hpp"
#include "factgraph/graph.hpp"
#include "factgraph/triplet.hpp"

namespace factgraph {

struct GraphBuildOptions {
    int n_max = 20;
    // Ablation switches: dropping relation edges keeps only "belong to"
    // links; fully_connected replaces all structure with a complete graph
    // over the real nodes carrying a constant (zero) edge feature.
    bool relation_edges = true;
    bool fully_connected = false;
};

// Builds the per-sample relation graph. Node order is deterministic: claim,
// evidence in input order, entities in first-mention order, pads last.
// Throws InvalidInputError when the claim is empty or n_max cannot hold the
// claim plus all evidence.
RelationGraph build_graph(const std::string& claim, const std::vector<std::string>& evidence,
                          const std::vector<Triplet>& triplets, const EmbeddingProvider& embed,
                          const GraphBuildOptions& options);

inline RelationGraph build_graph(const std::string& claim, const std::vector<std::string>& evidence,
                                 const std::vector<Triplet>& triplets,
                                 const EmbeddingProvider& embed, int n_max) {
    GraphBuildOptions options;
    options.n_max = n_max;
    return build_graph(claim, evidence, triplets, embed, options);
}

}  // namespace factgraph
