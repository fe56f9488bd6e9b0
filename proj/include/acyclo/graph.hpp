#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acyclo/bits.hpp"
#include "acyclo/errors.hpp"

namespace acyclo {

using VertexId = int;
// Ascending unless a function documents another order.
using VertexSet = std::vector<VertexId>;

inline constexpr int kDefaultSizeCap = 10000;

// ---------------------------------------------------------------------------
// UndirectedGraph: simple graph, adjacency rows as bitsets.

class UndirectedGraph {
public:
    UndirectedGraph() = default;

    explicit UndirectedGraph(int n) : n_(n), adj_(static_cast<size_t>(n), Bits(n)) {}

    UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edges) : UndirectedGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int size() const { return n_; }
    long long edge_count() const { return m_; }

    bool edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    const Bits& adj(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        if (edge(u, v)) throw FormatError("duplicate undirected edge");
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
        ++m_;
    }

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<size_t>(u)].next(u); v >= 0; v = adj_[static_cast<size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced by s (ascending); local id i maps to s[i].
    UndirectedGraph induced(const VertexSet& s) const {
        UndirectedGraph h(static_cast<int>(s.size()));
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        return h;
    }

    bool operator==(const UndirectedGraph&) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw FormatError("vertex id out of range");
        if (u == v) throw FormatError("self-loop");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bits> adj_;
};

// ---------------------------------------------------------------------------
// OrientedGraph: at most one directed edge per vertex pair, no loops.

class OrientedGraph {
public:
    OrientedGraph() = default;

    explicit OrientedGraph(int n)
        : n_(n), out_(static_cast<size_t>(n), Bits(n)), in_(static_cast<size_t>(n), Bits(n)) {}

    OrientedGraph(int n, const std::vector<std::pair<int, int>>& edges) : OrientedGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int size() const { return n_; }
    long long edge_count() const { return m_; }

    bool edge(int u, int v) const { return out_[static_cast<size_t>(u)].test(v); }
    const Bits& out(int v) const { return out_[static_cast<size_t>(v)]; }
    const Bits& in(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return out_[static_cast<size_t>(v)].count(); }
    int in_degree(int v) const { return in_[static_cast<size_t>(v)].count(); }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw FormatError("vertex id out of range");
        if (u == v) throw FormatError("self-loop");
        if (edge(u, v)) throw FormatError("duplicate edge");
        if (edge(v, u)) throw AntisymmetryViolation("antiparallel edge pair");
        out_[static_cast<size_t>(u)].set(v);
        in_[static_cast<size_t>(v)].set(u);
        ++m_;
    }

    // Edges ascending by (u, v).
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = out_[static_cast<size_t>(u)].first(); v >= 0; v = out_[static_cast<size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const OrientedGraph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bits> out_;
    std::vector<Bits> in_;
};

// ---------------------------------------------------------------------------
// Tournament: exactly one directed edge per pair.

class Tournament {
public:
    Tournament() = default;

    // Takes out-neighborhood rows; validates completeness and antisymmetry.
    explicit Tournament(std::vector<Bits> out) : n_(static_cast<int>(out.size())), out_(std::move(out)) {
        for (int i = 0; i < n_; ++i) {
            if (out_[static_cast<size_t>(i)].universe() != n_) throw DimensionMismatch("row size mismatch");
            if (out_[static_cast<size_t>(i)].test(i)) throw FormatError("self-loop");
        }
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                bool ij = out_[static_cast<size_t>(i)].test(j);
                bool ji = out_[static_cast<size_t>(j)].test(i);
                if (ij == ji)
                    throw AntisymmetryViolation(ij ? "both directions set" : "missing direction");
            }
    }

    int size() const { return n_; }
    long long edge_count() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    bool edge(int u, int v) const { return out_[static_cast<size_t>(u)].test(v); }
    const Bits& out(int v) const { return out_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return out_[static_cast<size_t>(v)].count(); }

    // In a tournament N^-(v) is the complement of N^+(v) u {v}.
    Bits in(int v) const {
        Bits b = out_[static_cast<size_t>(v)];
        b.set(v);
        b.flip();
        return b;
    }

    OrientedGraph as_oriented() const {
        OrientedGraph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = out_[static_cast<size_t>(u)].first(); v >= 0; v = out_[static_cast<size_t>(u)].next(v))
                g.add_edge(u, v);
        return g;
    }

    // Subtournament induced by s (ascending); local id i maps to s[i].
    Tournament induced(const VertexSet& s) const {
        int k = static_cast<int>(s.size());
        std::vector<Bits> rows(static_cast<size_t>(k), Bits(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && edge(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]))
                    rows[static_cast<size_t>(i)].set(j);
        return Tournament(std::move(rows));
    }

    bool operator==(const Tournament&) const = default;

private:
    int n_ = 0;
    std::vector<Bits> out_;
};

// Edge (i, j) present iff i < j; the unique acyclic tournament.
inline Tournament transitive_tournament(int n, int size_cap = kDefaultSizeCap) {
    if (n < 1) throw PreconditionViolated("transitive_tournament: n must be >= 1");
    if (n > size_cap) throw SizeLimitExceeded("transitive_tournament: n exceeds cap");
    std::vector<Bits> rows(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rows[static_cast<size_t>(i)].set(j);
    return Tournament(std::move(rows));
}

// ---------------------------------------------------------------------------
// LinearOrder: permutation of 0..n-1 plus its inverse.

class LinearOrder {
public:
    LinearOrder() = default;

    explicit LinearOrder(std::vector<int> order) : order_(std::move(order)) {
        int n = static_cast<int>(order_.size());
        pos_.assign(static_cast<size_t>(n), -1);
        for (int k = 0; k < n; ++k) {
            int v = order_[static_cast<size_t>(k)];
            if (v < 0 || v >= n || pos_[static_cast<size_t>(v)] != -1)
                throw NotAPermutation("order is not a permutation of 0..n-1");
            pos_[static_cast<size_t>(v)] = k;
        }
    }

    static LinearOrder identity(int n) {
        std::vector<int> o(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) o[static_cast<size_t>(i)] = i;
        return LinearOrder(std::move(o));
    }

    int size() const { return static_cast<int>(order_.size()); }
    int at(int k) const { return order_[static_cast<size_t>(k)]; }
    int position(int v) const { return pos_[static_cast<size_t>(v)]; }
    const std::vector<int>& order() const { return order_; }

    LinearOrder reversed() const {
        std::vector<int> o(order_.rbegin(), order_.rend());
        return LinearOrder(std::move(o));
    }

    bool operator==(const LinearOrder&) const = default;

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

// ---------------------------------------------------------------------------
// Generic directed view: Tournament and OrientedGraph both satisfy this.

template <class G>
concept DirectedView = requires(const G& g, int v) {
    { g.size() } -> std::convertible_to<int>;
    { g.edge(v, v) } -> std::convertible_to<bool>;
    { g.out(v) } -> std::convertible_to<Bits>;
};

template <DirectedView G>
UndirectedGraph underlying_graph(const G& g) {
    int n = g.size();
    UndirectedGraph h(n);
    for (int u = 0; u < n; ++u) {
        const Bits& row = g.out(u);
        for (int v = row.next(u); v >= 0; v = row.next(v))
            if (!h.edge(u, v)) h.add_edge(u, v);
        for (int v = row.first(); v >= 0 && v < u; v = row.next(v))
            if (!h.edge(v, u)) h.add_edge(v, u);
    }
    return h;
}

// Kahn with smallest-id selection; nullopt when the digraph has a cycle.
template <DirectedView G>
std::optional<std::vector<int>> topological_order(const G& g) {
    int n = g.size();
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = g.out(u).first(); v >= 0; v = g.out(u).next(v)) ++indeg[static_cast<size_t>(v)];
    Bits ready(n);
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) ready.set(v);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    while (ready.any()) {
        int v = ready.first();
        ready.reset(v);
        order.push_back(v);
        for (int w = g.out(v).first(); w >= 0; w = g.out(v).next(w))
            if (--indeg[static_cast<size_t>(w)] == 0) ready.set(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

template <DirectedView G>
bool is_acyclic(const G& g) {
    return topological_order(g).has_value();
}

}  // namespace acyclo
