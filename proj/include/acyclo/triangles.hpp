#pragma once

// Cyclic-triangle census (per-edge membership counts via neighborhood
// intersection popcounts) and transitive-subtournament search.

#include <optional>
#include <span>
#include <vector>

#include "acyclo/detail/chain_search.hpp"
#include "acyclo/graph.hpp"

namespace acyclo {

struct EdgeTriangleReport {
    int t = 0;
    long long total_cyclic = 0;
    std::vector<int> count;  // count[u * t + v], defined where edge (u, v) exists

    int count_of(int u, int v) const { return count[static_cast<size_t>(u) * static_cast<size_t>(t) + static_cast<size_t>(v)]; }
};

// For edge (u, v): #cyclic triangles containing it = |N+(v) n N-(u)|.
inline EdgeTriangleReport cyclic_triangle_counts(const Tournament& g) {
    int t = g.size();
    EdgeTriangleReport report;
    report.t = t;
    report.count.assign(static_cast<size_t>(t) * static_cast<size_t>(std::max(t, 1)), 0);
    long long sum = 0;
    for (int u = 0; u < t; ++u) {
        Bits in_u = g.in(u);
        const Bits& row = g.out(u);
        for (int v = row.first(); v >= 0; v = row.next(v)) {
            int c = g.out(v).count_and(in_u);
            report.count[static_cast<size_t>(u) * static_cast<size_t>(t) + static_cast<size_t>(v)] = c;
            sum += c;
        }
    }
    report.total_cyclic = sum / 3;
    return report;
}

struct MinCyclicEdge {
    int u = -1, v = -1;
    int q = 0;  // cyclic triangles through (u, v)
};

// Edge on the fewest cyclic triangles, lexicographically smallest (u, v) on
// ties. q <= (t+1)/4 always.
inline MinCyclicEdge min_cyclic_edge(const Tournament& g) {
    int t = g.size();
    if (t < 2) throw PreconditionViolated("min_cyclic_edge: need at least one edge");
    EdgeTriangleReport report = cyclic_triangle_counts(g);
    MinCyclicEdge best;
    for (int u = 0; u < t; ++u) {
        const Bits& row = g.out(u);
        for (int v = row.first(); v >= 0; v = row.next(v)) {
            int c = report.count_of(u, v);
            if (best.u < 0 || c < best.q) best = {u, v, c};
        }
    }
    if (4 * best.q > t + 1) throw VerificationFailed("min cyclic-edge count above (t+1)/4");
    return best;
}

// Largest vertex set inducing an acyclic subtournament, returned in beat
// order (first vertex has edges to all later ones).
inline VertexSet max_transitive_subtournament(const Tournament& g, int max_n = 40) {
    if (g.size() > max_n) throw SizeLimitExceeded("max_transitive_subtournament: graph exceeds cap");
    std::vector<Bits> rows;
    rows.reserve(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) rows.push_back(g.out(v));
    detail::ChainSearch chains(rows, g.size());
    Bits all(g.size());
    for (int v = 0; v < g.size(); ++v) all.set(v);
    return chains.longest(all);
}

// First transitive set of size exactly s (beat order) that intersects each
// forbidden set in at most one vertex; nullopt when exhaustive search fails.
inline std::optional<VertexSet> find_transitive_subtournament(const Tournament& g, int s,
                                                              std::span<const VertexSet> forbidden = {},
                                                              int max_n = 40) {
    if (g.size() > max_n) throw SizeLimitExceeded("find_transitive_subtournament: graph exceeds cap");
    if (s < 1) throw PreconditionViolated("find_transitive_subtournament: s must be >= 1");
    std::vector<Bits> rows;
    rows.reserve(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) rows.push_back(g.out(v));
    std::vector<Bits> forb;
    forb.reserve(forbidden.size());
    for (const VertexSet& f : forbidden) {
        Bits b(g.size());
        for (int v : f) b.set(v);
        forb.push_back(b);
    }
    detail::ChainSearch chains(rows, g.size());
    Bits all(g.size());
    for (int v = 0; v < g.size(); ++v) all.set(v);
    return chains.find_exact(all, s, forb);
}

// True iff `chain` lists an acyclic subtournament in beat order.
inline bool is_transitive_chain(const Tournament& g, std::span<const int> chain) {
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j)
            if (!g.edge(chain[i], chain[j])) return false;
    return true;
}

}  // namespace acyclo
