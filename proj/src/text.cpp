#include "factgraph/text.hpp"

#include <cctype>

namespace factgraph::text {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool is_token_char(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           c >= 0x80;
}

char lower(unsigned char c) { return (c >= 'A' && c <= 'Z') ? char(c + 32) : char(c); }

}  // namespace

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (unsigned char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(char(c));
        }
    }
    return out;
}

std::string strip_wrapping(std::string_view s) {
    std::string cur(s);
    for (;;) {
        std::string before = cur;
        // trim
        size_t b = 0, e = cur.size();
        while (b < e && is_space((unsigned char)cur[b])) ++b;
        while (e > b && is_space((unsigned char)cur[e - 1])) --e;
        cur = cur.substr(b, e - b);
        // matching quote pair
        if (cur.size() >= 2) {
            char f = cur.front(), l = cur.back();
            if ((f == '"' && l == '"') || (f == '\'' && l == '\'') || (f == '`' && l == '`')) {
                cur = cur.substr(1, cur.size() - 2);
            }
        }
        while (!cur.empty() && cur.back() == '.') cur.pop_back();
        while (!cur.empty() && cur.front() == '.') cur.erase(cur.begin());
        if (cur == before) break;
    }
    return cur;
}

std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = lower((unsigned char)c);
    return out;
}

std::string normalize_surface(std::string_view s) {
    return collapse_whitespace(strip_wrapping(s));
}

std::string normalize_key(std::string_view s) { return lowercase_ascii(normalize_surface(s)); }

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (needle.size() > haystack.size()) return false;
    for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        size_t j = 0;
        while (j < needle.size() &&
               lower((unsigned char)haystack[i + j]) == lower((unsigned char)needle[j]))
            ++j;
        if (j == needle.size()) return true;
    }
    return false;
}

int count_occurrences_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty() || needle.size() > haystack.size()) return 0;
    int count = 0;
    size_t i = 0;
    while (i + needle.size() <= haystack.size()) {
        size_t j = 0;
        while (j < needle.size() &&
               lower((unsigned char)haystack[i + j]) == lower((unsigned char)needle[j]))
            ++j;
        if (j == needle.size()) {
            ++count;
            i += needle.size();  // non-overlapping
        } else {
            ++i;
        }
    }
    return count;
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : s) {
        if (is_token_char(c)) {
            cur.push_back(lower(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view bytes) { return fnv1a64(bytes, 0xcbf29ce484222325ULL); }

}  // namespace factgraph::text
