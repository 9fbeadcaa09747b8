#pragma once

#include <string>
#include <vector>

#include "factgraph/linalg.hpp"

namespace factgraph {

enum class NodeKind { Claim, Evidence, Entity, Pad };

const char* node_kind_name(NodeKind kind);

struct GraphNode {
    NodeKind kind = NodeKind::Pad;
    int evidence_index = -1;  // valid when kind == Evidence
    std::string text;         // full text for claim/evidence, surface form for entities
    Vec feature;
};

struct GraphEdge {
    int a = 0;  // a < b; the adjacency view is symmetric
    int b = 0;
    std::string relation;
    Vec feature;
};

struct IncidentEdge {
    int edge = -1;
    int neighbor = -1;
};

// A finalized per-sample relation graph: exactly one claim node at index 0,
// evidence nodes in input order, entity nodes in first-mention order, pad
// nodes (isolated, zero features) filling up to n_max.
struct RelationGraph {
    int n_max = 0;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    // Incident edges per node, sorted by edge index; empty for pad nodes.
    const std::vector<std::vector<IncidentEdge>>& adjacency() const { return adjacency_; }

    int real_node_count() const;
    int claim_index() const;  // StructuralError unless exactly one claim node
    std::vector<int> evidence_node_indices() const;

    // Rebuilds the adjacency view and checks the structural invariants
    // (node count == n_max, edge indices in range, no edges on pads).
    void finalize();

    // Debug dump as JSON text; features are omitted unless requested.
    std::string dump_json(bool include_features = false) const;
    static RelationGraph parse_json(const std::string& text);

private:
    std::vector<std::vector<IncidentEdge>> adjacency_;
};

}  // namespace factgraph
