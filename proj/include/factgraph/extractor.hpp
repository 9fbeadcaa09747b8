#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "factgraph/triplet.hpp"

namespace factgraph {

class LLMClient;

// Fills the extraction prompt template with `text`. Byte-stable: the same
// input always yields the same output. Throws InvalidInputError on empty text.
std::string build_prompt(std::string_view text);

struct ParseOutcome {
    std::vector<Triplet> triplets;
    std::vector<MalformedSpan> malformed_spans;
};

// Scans free-form model output for parenthesized comma-separated 3-tuples.
// Total: never throws, never aborts. Tuples with the wrong arity, empty
// fields, head == tail, or repeating an already-seen fact are recorded as
// malformed spans instead of being silently dropped.
ParseOutcome parse_triplets(std::string_view raw, TripletSource source = TripletSource::claim());

// One "(head, relation, tail)" per line; reparsing the output yields an
// equal triplet list for well-formed inputs.
std::string format_triplets(const std::vector<Triplet>& triplets);

// Deterministic offline extractor: returns the gold triplets whose head and
// tail both occur in `text` (case-insensitive substring).
ExtractionResult extract_oracle(std::string_view text, const std::vector<Triplet>& gold,
                                TripletSource source = TripletSource::claim());

// Sends the prompt for `text` through `client` and parses the response.
// Transport failures propagate as TransportError (after the client's retries);
// an unparseable response is not an error and comes back with a span covering
// the whole response.
ExtractionResult extract_remote(std::string_view text, LLMClient& client,
                                TripletSource source = TripletSource::claim());

// Negative log-likelihood of the per-triplet correctness labels: a triplet
// counts as correct when some gold triplet has the same key. Confidences must
// align with `extracted` and lie in (0, 1]; they are clamped to
// [1e-7, 1 - 1e-7] before the logs.
ExtractorScore score_extraction(const std::vector<Triplet>& extracted,
                                const std::vector<Triplet>& gold,
                                const std::vector<double>& confidences);

// Convenience overload: confidence 1.0 for every extracted triplet.
ExtractorScore score_extraction(const std::vector<Triplet>& extracted,
                                const std::vector<Triplet>& gold);

}  // namespace factgraph
