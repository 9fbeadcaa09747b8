#include "factgraph/graph.hpp"

#include <nlohmann/json.hpp>

#include "factgraph/errors.hpp"

namespace factgraph {

namespace {
using nlohmann::json;

NodeKind kind_from_name(const std::string& name) {
    if (name == "claim") return NodeKind::Claim;
    if (name == "evidence") return NodeKind::Evidence;
    if (name == "entity") return NodeKind::Entity;
    if (name == "pad") return NodeKind::Pad;
    throw InvalidInputError("unknown node kind: " + name);
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Vec vec_from_json(const json& arr) {
    Vec v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) v[long(i)] = arr[i].get<double>();
    return v;
}

}  // namespace

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::Claim: return "claim";
        case NodeKind::Evidence: return "evidence";
        case NodeKind::Entity: return "entity";
        case NodeKind::Pad: return "pad";
    }
    return "?";
}

int RelationGraph::real_node_count() const {
    int count = 0;
    for (const GraphNode& node : nodes) {
        if (node.kind != NodeKind::Pad) ++count;
    }
    return count;
}

int RelationGraph::claim_index() const {
    int index = -1;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].kind == NodeKind::Claim) {
            if (index >= 0) throw StructuralError("graph has multiple claim nodes");
            index = int(i);
        }
    }
    if (index < 0) throw StructuralError("graph has no claim node");
    return index;
}

std::vector<int> RelationGraph::evidence_node_indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].kind == NodeKind::Evidence) out.push_back(int(i));
    }
    return out;
}

void RelationGraph::finalize() {
    if (int(nodes.size()) != n_max) {
        throw StructuralError("graph node count does not match n_max");
    }
    adjacency_.assign(nodes.size(), {});
    for (size_t e = 0; e < edges.size(); ++e) {
        const GraphEdge& edge = edges[e];
        if (edge.a < 0 || edge.b < 0 || edge.a >= int(nodes.size()) ||
            edge.b >= int(nodes.size()) || edge.a == edge.b) {
            throw StructuralError("graph edge endpoints out of range");
        }
        if (nodes[edge.a].kind == NodeKind::Pad || nodes[edge.b].kind == NodeKind::Pad) {
            throw StructuralError("graph edge touches a pad node");
        }
        adjacency_[edge.a].push_back({int(e), edge.b});
        adjacency_[edge.b].push_back({int(e), edge.a});
    }
}

std::string RelationGraph::dump_json(bool include_features) const {
    json out;
    out["n_max"] = n_max;
    out["nodes"] = json::array();
    for (const GraphNode& node : nodes) {
        json n;
        n["kind"] = node_kind_name(node.kind);
        if (node.kind == NodeKind::Evidence) n["evidence_index"] = node.evidence_index;
        n["text"] = node.text;
        if (include_features) n["feature"] = vec_to_json(node.feature);
        out["nodes"].push_back(std::move(n));
    }
    out["edges"] = json::array();
    for (const GraphEdge& edge : edges) {
        json e;
        e["a"] = edge.a;
        e["b"] = edge.b;
        e["relation"] = edge.relation;
        if (include_features) e["feature"] = vec_to_json(edge.feature);
        out["edges"].push_back(std::move(e));
    }
    return out.dump();
}

RelationGraph RelationGraph::parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw InvalidInputError("graph JSON is not parseable");
    RelationGraph graph;
    graph.n_max = parsed.at("n_max").get<int>();
    for (const json& n : parsed.at("nodes")) {
        GraphNode node;
        node.kind = kind_from_name(n.at("kind").get<std::string>());
        node.evidence_index = n.value("evidence_index", -1);
        node.text = n.at("text").get<std::string>();
        if (n.contains("feature")) node.feature = vec_from_json(n["feature"]);
        graph.nodes.push_back(std::move(node));
    }
    for (const json& e : parsed.at("edges")) {
        GraphEdge edge;
        edge.a = e.at("a").get<int>();
        edge.b = e.at("b").get<int>();
        edge.relation = e.at("relation").get<std::string>();
        if (e.contains("feature")) edge.feature = vec_from_json(e["feature"]);
        graph.edges.push_back(std::move(edge));
    }
    graph.finalize();
    return graph;
}

}  // namespace factgraph
