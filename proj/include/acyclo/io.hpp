#pragma once

// Line-oriented ASCII formats:
//   .trn  "TRN <n>"   + n rows of n chars over {0,1,-}, row i col j = '1' iff i->j
//   .dg   "DG <n> <m>" + m lines "u v" (edge u->v)
//   .ug   "UG <n> <m>" + m lines "u v" with u < v
//   .ord  "ORD <n>"   + one line of n space-separated ids (a permutation)

#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "acyclo/graph.hpp"

namespace acyclo {

enum class GraphKind { tournament, digraph, undirected, order };

using ParsedGraph = std::variant<Tournament, OrientedGraph, UndirectedGraph, LinearOrder>;

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // A final '\n' leaves one empty trailing piece; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline std::vector<long long> parse_int_list(std::string_view line) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || ptr == line.data() + i) throw FormatError("expected integer");
        i = static_cast<size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ') throw FormatError("malformed integer token");
        out.push_back(value);
    }
    return out;
}

inline std::vector<long long> parse_ints(std::string_view line, size_t expected) {
    std::vector<long long> out = parse_int_list(line);
    if (out.size() != expected) throw FormatError("wrong number of fields on line");
    return out;
}

inline std::vector<long long> parse_header(const std::vector<std::string_view>& lines, std::string_view tag,
                                           size_t value_count) {
    if (lines.empty()) throw FormatError("empty input");
    std::string_view h = lines[0];
    if (h.substr(0, tag.size()) != tag || h.size() <= tag.size() || h[tag.size()] != ' ')
        throw FormatError(std::string("missing header: ") + std::string(tag));
    return parse_ints(h.substr(tag.size() + 1), value_count);
}

inline int checked_n(long long n, long long cap = kDefaultSizeCap) {
    if (n < 0) throw FormatError("negative size");
    if (n > cap) throw SizeLimitExceeded("graph size exceeds cap");
    return static_cast<int>(n);
}

}  // namespace detail

inline Tournament parse_tournament(std::string_view text) {
    auto lines = detail::split_lines(text);
    int n = detail::checked_n(detail::parse_header(lines, "TRN", 1)[0]);
    if (lines.size() != static_cast<size_t>(n) + 1) throw FormatError("wrong number of rows");
    std::vector<Bits> rows(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i) {
        std::string_view row = lines[static_cast<size_t>(i) + 1];
        if (row.size() != static_cast<size_t>(n)) throw FormatError("wrong row length");
        for (int j = 0; j < n; ++j) {
            char c = row[static_cast<size_t>(j)];
            if (i == j) {
                if (c != '-') throw AntisymmetryViolation("diagonal must be '-'");
            } else if (c == '1') {
                rows[static_cast<size_t>(i)].set(j);
            } else if (c != '0') {
                throw FormatError("row characters must be 0, 1 or -");
            }
        }
    }
    return Tournament(std::move(rows));
}

inline std::string serialize_tournament(const Tournament& t) {
    int n = t.size();
    std::string out = "TRN " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out += (i == j) ? '-' : (t.edge(i, j) ? '1' : '0');
        out += '\n';
    }
    return out;
}

inline OrientedGraph parse_digraph(std::string_view text) {
    auto lines = detail::split_lines(text);
    auto header = detail::parse_header(lines, "DG", 2);
    int n = detail::checked_n(header[0]);
    long long m = header[1];
    if (m < 0 || lines.size() != static_cast<size_t>(m) + 1) throw FormatError("wrong number of edge lines");
    OrientedGraph g(n);
    for (long long k = 0; k < m; ++k) {
        auto uv = detail::parse_ints(lines[static_cast<size_t>(k) + 1], 2);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) throw FormatError("vertex id out of range");
        g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    return g;
}

inline std::string serialize_digraph(const OrientedGraph& g) {
    std::string out = "DG " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline UndirectedGraph parse_undirected(std::string_view text) {
    auto lines = detail::split_lines(text);
    auto header = detail::parse_header(lines, "UG", 2);
    int n = detail::checked_n(header[0]);
    long long m = header[1];
    if (m < 0 || lines.size() != static_cast<size_t>(m) + 1) throw FormatError("wrong number of edge lines");
    UndirectedGraph g(n);
    for (long long k = 0; k < m; ++k) {
        auto uv = detail::parse_ints(lines[static_cast<size_t>(k) + 1], 2);
        if (uv[0] < 0 || uv[1] >= n) throw FormatError("vertex id out of range");
        if (uv[0] >= uv[1]) throw FormatError("undirected edges require u < v");
        g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    return g;
}

inline std::string serialize_undirected(const UndirectedGraph& g) {
    std::string out = "UG " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline LinearOrder parse_order(std::string_view text) {
    auto lines = detail::split_lines(text);
    int n = detail::checked_n(detail::parse_header(lines, "ORD", 1)[0]);
    if (lines.size() != 2) throw FormatError("order file needs exactly one data line");
    auto ids = detail::parse_ints(lines[1], static_cast<size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (long long v : ids) {
        if (v < 0 || v >= n) throw NotAPermutation("vertex id out of range");
        order.push_back(static_cast<int>(v));
    }
    return LinearOrder(std::move(order));
}

inline std::string serialize_order(const LinearOrder& pi) {
    std::string out = "ORD " + std::to_string(pi.size()) + "\n";
    for (int k = 0; k < pi.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(pi.at(k));
    }
    out += '\n';
    return out;
}

inline ParsedGraph parse_graph_file(std::string_view text, GraphKind kind) {
    switch (kind) {
        case GraphKind::tournament: return parse_tournament(text);
        case GraphKind::digraph: return parse_digraph(text);
        case GraphKind::undirected: return parse_undirected(text);
        case GraphKind::order: return parse_order(text);
    }
    throw FormatError("unknown graph kind");
}

inline std::string serialize_graph_file(const ParsedGraph& g) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Tournament>) return serialize_tournament(x);
            else if constexpr (std::is_same_v<T, OrientedGraph>) return serialize_digraph(x);
            else if constexpr (std::is_same_v<T, UndirectedGraph>) return serialize_undirected(x);
            else return serialize_order(x);
        },
        g);
}

}  // namespace acyclo
