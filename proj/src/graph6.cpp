#include "spectraham/graph6.hpp"

#include <cstddef>

namespace spectraham {

namespace {

constexpr const char* kHeader = ">>graph6<<";

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
    raise(ErrorCode::ParseError, "graph6 parse error at byte " + std::to_string(offset) + ": " + what);
}

int value_at(const std::string& s, std::size_t i) {
    if (i >= s.size()) parse_fail(s.size(), "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) parse_fail(i, "byte out of printable graph6 range");
    return c - 63;
}

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t base = 0;
    if (s.rfind(kHeader, 0) == 0) {
        s = s.substr(std::string(kHeader).size());
        base = std::string(kHeader).size();
    }
    if (s.empty()) parse_fail(base, "empty input");

    std::size_t pos = 0;
    long long n;
    if (value_at(s, pos) != 63) {
        n = value_at(s, pos);
        pos += 1;
    } else if (s.size() > 1 && value_at(s, 1) != 63) {
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | value_at(s, i);
        pos = 4;
    } else {
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | value_at(s, i);
        pos = 8;
    }
    if (n < 0 || n > 1'000'000) parse_fail(base, "unsupported vertex count");

    long long pair_bits = n * (n - 1) / 2;
    std::size_t body_bytes = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (s.size() - pos != body_bytes)
        parse_fail(base + s.size(), "body length " + std::to_string(s.size() - pos) + " does not match order " +
                                        std::to_string(n) + " (expected " + std::to_string(body_bytes) + ")");

    GraphBuilder builder(static_cast<int>(n));
    long long bit_index = 0;
    for (std::size_t i = 0; i < body_bytes; ++i) {
        int chunk = value_at(s, pos + i);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int bit = (chunk >> b) & 1;
            if (bit_index >= pair_bits) {
                if (bit) parse_fail(base + pos + i, "nonzero padding bit");
                continue;
            }
            if (bit) {
                // column-major upper triangle: bits ordered (0,1),(0,2),(1,2),(0,3),...
                long long idx = bit_index;
                int col = 1;
                while (idx >= col) idx -= col, ++col;
                builder.add_edge(static_cast<int>(idx), col);
            }
        }
    }
    return std::move(builder).freeze();
}

std::string write_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.has_edge(row, static_cast<int>(col)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        chunk <<= (6 - filled);
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

} // namespace spectraham
