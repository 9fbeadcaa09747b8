#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace factgraph::text {

// Trim outer whitespace and collapse internal runs to a single space.
std::string collapse_whitespace(std::string_view s);

// Strip matching surrounding quote pairs and leading/trailing periods.
std::string strip_wrapping(std::string_view s);

// ASCII lowercase; bytes outside [A-Z] pass through untouched.
std::string lowercase_ascii(std::string_view s);

// Display normalization: trim, collapse whitespace, strip quotes/periods.
std::string normalize_surface(std::string_view s);

// Equality key: lowercase of the display normalization.
std::string normalize_key(std::string_view s);

// Case-insensitive (ASCII) substring test / non-overlapping occurrence count.
bool contains_ci(std::string_view haystack, std::string_view needle);
int count_occurrences_ci(std::string_view haystack, std::string_view needle);

// Tokenizer used by the hashed embedding: lowercase, split on anything that
// is not an ASCII alphanumeric or a byte >= 0x80 (keeps UTF-8 words whole).
std::vector<std::string> tokenize(std::string_view s);

// 64-bit FNV-1a over raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t continuation);

}  // namespace factgraph::text
