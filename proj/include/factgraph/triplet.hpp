#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace factgraph {

// Where a triplet was extracted from.
struct TripletSource {
    enum Kind { Claim, Evidence };
    Kind kind = Claim;
    int evidence_index = -1;  // valid when kind == Evidence

    static TripletSource claim() { return {Claim, -1}; }
    static TripletSource evidence(int index) { return {Evidence, index}; }
    bool operator==(const TripletSource&) const = default;
};

// (head entity, relation phrase, tail entity). Fields are stored in display
// normalization (original casing, collapsed whitespace, quotes/periods
// stripped); equality runs on the lowercase key.
struct Triplet {
    std::string head;
    std::string relation;
    std::string tail;
    TripletSource source;

    // Normalizes the fields and validates the invariants (non-empty fields,
    // head != tail under the key). Returns nullopt when violated.
    static std::optional<Triplet> make(std::string_view head, std::string_view relation,
                                       std::string_view tail,
                                       TripletSource source = TripletSource::claim());

    // Equality key over (head, relation, tail); source does not participate.
    std::string key() const;

    bool same_fact(const Triplet& other) const { return key() == other.key(); }
};

struct MalformedSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
    std::string reason;
};

struct ExtractionResult {
    std::vector<Triplet> triplets;
    std::string raw_response;
    std::vector<MalformedSpan> malformed_spans;
};

struct ExtractorScore {
    double loss = 0.0;
    int matched = 0;
    int extracted = 0;
    int gold = 0;
};

}  // namespace factgraph
