#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace factorlab {

// graph6: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// printable byte (value + 63), most significant bit first, zero padded.

namespace detail {

inline void graph6_put_size(std::string& out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

[[noreturn]] inline void graph6_fail(const std::string& what, std::size_t column)
{
    throw Error(ErrorCode::Graph6Parse, what + " at column " + std::to_string(column + 1));
}

inline int graph6_digit(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        graph6_fail("byte " + std::to_string(c) + " outside graph6 range 63..126", pos);
    return c - 63;
}

} // namespace detail

inline std::string to_graph6(const Graph& g)
{
    std::string out;
    detail::graph6_put_size(out, g.order());
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Parses one graph6 record (no trailing newline). An optional ">>graph6<<" header is accepted.
inline Graph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (text.starts_with(header))
        pos = header.size();
    if (pos >= text.size())
        detail::graph6_fail("empty graph6 record", pos);
    if (text[pos] == ':' || text[pos] == '&')
        detail::graph6_fail("sparse6/digraph6 records are not graph6", pos);

    std::int64_t n = 0;
    if (text[pos] != '~') {
        n = detail::graph6_digit(text, pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        if (pos + 8 > text.size())
            detail::graph6_fail("truncated 8-byte size field", pos);
        for (std::size_t k = 2; k < 8; ++k)
            n = (n << 6) | detail::graph6_digit(text, pos + k);
        pos += 8;
    } else {
        if (pos + 4 > text.size())
            detail::graph6_fail("truncated 4-byte size field", pos);
        for (std::size_t k = 1; k < 4; ++k)
            n = (n << 6) | detail::graph6_digit(text, pos + k);
        pos += 4;
    }
    if (n > max_vertices)
        throw Error(ErrorCode::TooLarge, "graph6 record has " + std::to_string(n) + " vertices");

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected)
        detail::graph6_fail("expected " + std::to_string(expected) + " adjacency bytes, found " +
                                std::to_string(text.size() - pos),
                            pos);

    GraphBuilder b(static_cast<int>(n));
    std::int64_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
            const int digit = detail::graph6_digit(text, at);
            if ((digit >> (5 - bit % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = text.size() - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (detail::graph6_digit(text, last) & ((1 << pad) - 1))
            detail::graph6_fail("nonzero padding bits", last);
    }
    return b.build();
}

struct Graph6Record {
    std::size_t line = 0;
    std::string text;
    Graph graph;
};

/// Reads every non-blank line; parse errors report the 1-based line number.
inline std::vector<Graph6Record> read_graph6(std::istream& in)
{
    std::vector<Graph6Record> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.push_back({number, line, from_graph6(line)});
        } catch (const Error& e) {
            throw Error(e.code(), "line " + std::to_string(number) + ": " + e.detail());
        }
    }
    return out;
}

} // namespace factorlab
