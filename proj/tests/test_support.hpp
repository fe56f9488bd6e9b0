#pragma once

// Shared fixtures: small named graphs, enumeration of all labeled
// tournaments, and brute-force oracles kept deliberately naive and separate
// from the library's solvers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "acyclo/acyclo.hpp"

namespace test_support {

using namespace acyclo;

inline int pair_count(int t) { return t * (t - 1) / 2; }

// Bit k of mask decides pair k in lexicographic (i, j) order: set means i->j.
inline Tournament tournament_from_mask(int t, std::uint64_t mask) {
    std::vector<Bits> rows(static_cast<size_t>(t), Bits(t));
    int k = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j, ++k) {
            if ((mask >> k) & 1)
                rows[static_cast<size_t>(i)].set(j);
            else
                rows[static_cast<size_t>(j)].set(i);
        }
    return Tournament(std::move(rows));
}

inline OrientedGraph directed_cycle(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline UndirectedGraph complete_graph(int n) {
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline UndirectedGraph cycle_graph(int n) {
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

// rim vertices 0..rim-1 in a cycle, hub = rim adjacent to all of them.
inline UndirectedGraph wheel_graph(int rim) {
    UndirectedGraph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(std::min(i, (i + 1) % rim), std::max(i, (i + 1) % rim));
        g.add_edge(i, rim);
    }
    return g;
}

// Mycielski transform: keeps the graph triangle-free, raises the chromatic
// number by one. Shadow of v is n + v; the apex is 2n.
inline UndirectedGraph mycielski(const UndirectedGraph& g) {
    int n = g.size();
    UndirectedGraph m(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        m.add_edge(u, v);
        m.add_edge(std::min(n + u, v), std::max(n + u, v));
        m.add_edge(std::min(u, n + v), std::max(u, n + v));
    }
    for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
    return m;
}

// Mycielski of C5: triangle-free with chromatic number 4.
inline UndirectedGraph groetzsch_graph() { return mycielski(cycle_graph(5)); }

// Seeded G(n, 1/2): one coin per pair in lexicographic order.
inline UndirectedGraph random_graph(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next() & 1) g.add_edge(i, j);
    return g;
}

// ---------------------------------------------------------------------------
// Oracles: plain enumeration, vertex order 0..n-1, no heuristics.

inline bool oracle_k_colorable(const UndirectedGraph& g, int k) {
    int n = g.size();
    std::vector<int> color(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.edge(u, v) && color[static_cast<size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (self(self, v + 1)) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int oracle_chromatic(const UndirectedGraph& g) {
    if (g.size() == 0) return 0;
    for (int k = 1;; ++k)
        if (oracle_k_colorable(g, k)) return k;
}

inline int oracle_max_clique(const UndirectedGraph& g) {
    int n = g.size();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        bool clique = true;
        for (size_t i = 0; i < s.size() && clique; ++i)
            for (size_t j = i + 1; j < s.size() && clique; ++j)
                if (!g.edge(s[i], s[j])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

inline int oracle_longest_monotone(const std::vector<int>& seq, bool increasing) {
    int n = static_cast<int>(seq.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(seq[static_cast<size_t>(i)]);
        bool ok = true;
        for (size_t i = 0; i + 1 < s.size() && ok; ++i)
            ok = increasing ? s[i] < s[i + 1] : s[i] > s[i + 1];
        if (ok) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

// Maximum oracle_chromatic over every acyclic edge subset.
template <class G>
int oracle_f_by_subsets(const G& g) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int n = g.size();
    int best = n > 0 ? 1 : 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        OrientedGraph sub(n);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) sub.add_edge(edges[static_cast<size_t>(e)].first, edges[static_cast<size_t>(e)].second);
        if (!is_acyclic(sub)) continue;
        best = std::max(best, oracle_chromatic(underlying_graph(sub)));
    }
    return best;
}

// Maximum oracle_chromatic of the right graph over every permutation.
template <class G>
int oracle_f_by_orders(const G& g) {
    int n = g.size();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n > 0 ? 1 : 0;
    do {
        std::vector<int> pos(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) pos[static_cast<size_t>(perm[static_cast<size_t>(k)])] = k;
        UndirectedGraph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = g.out(u).first(); v >= 0; v = g.out(u).next(v))
                if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)])
                    h.add_edge(std::min(u, v), std::max(u, v));
        best = std::max(best, oracle_chromatic(h));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

struct TriangleOracle {
    long long total = 0;
    std::vector<int> edge_count;  // count[u * t + v]
};

inline TriangleOracle oracle_cyclic_triangles(const Tournament& g) {
    int t = g.size();
    TriangleOracle result;
    result.edge_count.assign(static_cast<size_t>(t) * static_cast<size_t>(std::max(t, 1)), 0);
    auto bump = [&](int u, int v) { ++result.edge_count[static_cast<size_t>(u) * static_cast<size_t>(t) + static_cast<size_t>(v)]; };
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int c = b + 1; c < t; ++c) {
                // A triangle is cyclic iff it has no vertex beating both others.
                bool a_src = g.edge(a, b) && g.edge(a, c);
                bool b_src = g.edge(b, a) && g.edge(b, c);
                bool c_src = g.edge(c, a) && g.edge(c, b);
                if (a_src || b_src || c_src) continue;
                ++result.total;
                for (auto [u, v] : {std::pair{a, b}, {a, c}, {b, c}}) {
                    if (g.edge(u, v))
                        bump(u, v);
                    else
                        bump(v, u);
                }
            }
    return result;
}

inline int oracle_max_transitive(const Tournament& g) {
    int t = g.size();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < t; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        bool acyclic = true;
        for (size_t i = 0; i < s.size() && acyclic; ++i)
            for (size_t j = i + 1; j < s.size() && acyclic; ++j)
                for (size_t k = j + 1; k < s.size() && acyclic; ++k) {
                    int a = s[i], b = s[j], c = s[k];
                    bool cyc = (g.edge(a, b) && g.edge(b, c) && g.edge(c, a)) ||
                               (g.edge(b, a) && g.edge(c, b) && g.edge(a, c));
                    if (cyc) acyclic = false;
                }
        if (acyclic) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

}  // namespace test_support
