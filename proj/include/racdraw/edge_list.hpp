#pragma once

// Plain-text edge lists:
//
//   # comment
//   n 5
//   0 4
//   1 2
//
// The header line must come first (after comments and blank lines). Edges are
// unordered pairs of 0-based ids.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "racdraw/layout.hpp"

namespace racdraw {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_unsigned(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace detail

inline GraphInput parse_edge_list(std::string_view text) {
    GraphInput g;
    bool have_header = false;
    std::unordered_set<std::uint64_t> seen;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto fields = detail::split_fields(line);
        if (fields.empty()) {
            if (end == text.size()) break;
            continue;
        }

        if (!have_header) {
            std::uint64_t n = 0;
            if (fields.size() != 2 || fields[0] != "n" || !detail::parse_unsigned(fields[1], n))
                throw Error(ErrorKind::MissingHeader, "expected header 'n <count>'", line_no);
            if (n == 0) throw Error(ErrorKind::EmptyGraph, "empty graph", line_no);
            if (n > UINT32_MAX) throw Error(ErrorKind::LimitExceeded, "vertex count too large", line_no);
            g.n = static_cast<std::size_t>(n);
            have_header = true;
        } else {
            std::uint64_t a = 0, b = 0;
            if (fields.size() != 2 || !detail::parse_unsigned(fields[0], a) || !detail::parse_unsigned(fields[1], b))
                throw Error(ErrorKind::MalformedLine, "expected 'u v'", line_no);
            if (a >= g.n || b >= g.n) throw Error(ErrorKind::IdOutOfRange, "vertex id out of range", line_no);
            if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop", line_no);
            const std::uint64_t key = a < b ? (a << 32) | b : (b << 32) | a;
            if (!seen.insert(key).second) throw Error(ErrorKind::DuplicateEdge, "duplicate edge", line_no);
            g.edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw Error(ErrorKind::MissingHeader, "expected header 'n <count>'", line_no);
    return g;
}

/// Canonical form: header, then one pair per line in stored order.
inline std::string serialize_edge_list(const GraphInput& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (auto [a, b] : g.edges) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

} // namespace racdraw
