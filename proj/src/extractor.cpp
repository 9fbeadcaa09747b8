#include "factgraph/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "factgraph/errors.hpp"
#include "factgraph/llm_client.hpp"
#include "factgraph/text.hpp"

namespace factgraph {

namespace {

constexpr std::string_view kPromptTemplate =
    "Please extract entities in the given text and the relations between entities. "
    "Let's think step by step. Please return in this form: (entity, relation, entity). "
    "Here is the text: [TEXT].";

constexpr std::string_view kPlaceholder = "[TEXT]";

std::vector<std::string_view> split_fields(std::string_view content) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    for (size_t i = 0; i <= content.size(); ++i) {
        if (i == content.size() || content[i] == ',') {
            fields.push_back(content.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

}  // namespace

std::optional<Triplet> Triplet::make(std::string_view head, std::string_view relation,
                                     std::string_view tail, TripletSource source) {
    Triplet t;
    t.head = text::normalize_surface(head);
    t.relation = text::normalize_surface(relation);
    t.tail = text::normalize_surface(tail);
    t.source = source;
    if (t.head.empty() || t.relation.empty() || t.tail.empty()) return std::nullopt;
    if (text::normalize_key(t.head) == text::normalize_key(t.tail)) return std::nullopt;
    return t;
}

std::string Triplet::key() const {
    std::string k = text::normalize_key(head);
    k.push_back('\x1f');
    k += text::normalize_key(relation);
    k.push_back('\x1f');
    k += text::normalize_key(tail);
    return k;
}

std::string build_prompt(std::string_view input) {
    if (input.empty()) throw InvalidInputError("build_prompt: text must be non-empty");
    const size_t pos = kPromptTemplate.find(kPlaceholder);
    std::string prompt(kPromptTemplate.substr(0, pos));
    prompt += input;
    prompt += kPromptTemplate.substr(pos + kPlaceholder.size());
    return prompt;
}

ParseOutcome parse_triplets(std::string_view raw, TripletSource source) {
    ParseOutcome out;
    std::unordered_set<std::string> seen;
    size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] != '(') {
            ++i;
            continue;
        }
        const size_t close = raw.find(')', i + 1);
        if (close == std::string_view::npos) {
            out.malformed_spans.push_back({i, raw.size() - i, "unterminated"});
            break;
        }
        const MalformedSpan span{i, close - i + 1, ""};
        const std::string_view content = raw.substr(i + 1, close - i - 1);
        i = close + 1;

        const auto fields = split_fields(content);
        if (fields.size() != 3) {
            out.malformed_spans.push_back({span.offset, span.length, "wrong-arity"});
            continue;
        }
        const std::string head = text::normalize_surface(fields[0]);
        const std::string relation = text::normalize_surface(fields[1]);
        const std::string tail = text::normalize_surface(fields[2]);
        if (head.empty() || relation.empty() || tail.empty()) {
            out.malformed_spans.push_back({span.offset, span.length, "empty-field"});
            continue;
        }
        if (text::normalize_key(head) == text::normalize_key(tail)) {
            out.malformed_spans.push_back({span.offset, span.length, "head-equals-tail"});
            continue;
        }
        Triplet t{head, relation, tail, source};
        if (!seen.insert(t.key()).second) {
            out.malformed_spans.push_back({span.offset, span.length, "duplicate"});
            continue;
        }
        out.triplets.push_back(std::move(t));
    }
    return out;
}

std::string format_triplets(const std::vector<Triplet>& triplets) {
    std::string out;
    for (const Triplet& t : triplets) {
        out += "(" + t.head + ", " + t.relation + ", " + t.tail + ")\n";
    }
    return out;
}

ExtractionResult extract_oracle(std::string_view input, const std::vector<Triplet>& gold,
                                TripletSource source) {
    ExtractionResult result;
    std::unordered_set<std::string> seen;
    for (const Triplet& g : gold) {
        if (!text::contains_ci(input, g.head) || !text::contains_ci(input, g.tail)) continue;
        Triplet t = g;
        t.source = source;
        if (!seen.insert(t.key()).second) continue;
        result.triplets.push_back(std::move(t));
    }
    result.raw_response = format_triplets(result.triplets);
    return result;
}

ExtractionResult extract_remote(std::string_view input, LLMClient& client, TripletSource source) {
    const std::string response = client.complete(build_prompt(input));
    ParseOutcome parsed = parse_triplets(response, source);
    ExtractionResult result;
    result.triplets = std::move(parsed.triplets);
    result.malformed_spans = std::move(parsed.malformed_spans);
    result.raw_response = response;
    if (result.triplets.empty() && result.malformed_spans.empty() && !response.empty()) {
        result.malformed_spans.push_back({0, response.size(), "no-parseable-triplets"});
    }
    return result;
}

ExtractorScore score_extraction(const std::vector<Triplet>& extracted,
                                const std::vector<Triplet>& gold,
                                const std::vector<double>& confidences) {
    if (confidences.size() != extracted.size()) {
        throw InvalidInputError("score_extraction: confidences must align with extracted");
    }
    std::unordered_set<std::string> gold_keys;
    for (const Triplet& g : gold) gold_keys.insert(g.key());

    constexpr double kEps = 1e-7;
    ExtractorScore score;
    score.extracted = int(extracted.size());
    score.gold = int(gold.size());
    for (size_t i = 0; i < extracted.size(); ++i) {
        const double raw_c = confidences[i];
        if (!(raw_c > 0.0) || raw_c > 1.0) {
            throw InvalidInputError("score_extraction: confidences must lie in (0, 1]");
        }
        const double c = std::clamp(raw_c, kEps, 1.0 - kEps);
        const bool correct = gold_keys.count(extracted[i].key()) > 0;
        if (correct) {
            ++score.matched;
            score.loss -= std::log(c);
        } else {
            score.loss -= std::log(1.0 - c);
        }
    }
    return score;
}

ExtractorScore score_extraction(const std::vector<Triplet>& extracted,
                                const std::vector<Triplet>& gold) {
    return score_extraction(extracted, gold, std::vector<double>(extracted.size(), 1.0));
}

}  // namespace factgraph
