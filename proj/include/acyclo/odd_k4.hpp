#pragma once

// K4-subdivisions with all six paths of odd length, found by exhaustive
// branch-quadruple + path-system backtracking; the seven cycles running
// through the branch vertices; and the inconsistent-odd-cycle certificate:
// an odd cycle of the underlying graph that is not a directed cycle is an
// acyclic subgraph with chromatic number exactly 3.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "acyclo/chromatic.hpp"
#include "acyclo/graph.hpp"

namespace acyclo {

// paths[0..5] connect (u,v), (v,w), (w,u), (x,u), (x,v), (x,w); each is the
// full vertex sequence between its two branch endpoints.
struct Subdivision {
    std::array<int, 4> branch{-1, -1, -1, -1};  // u, v, w, x
    std::array<std::vector<int>, 6> paths;

    int length(int i) const { return static_cast<int>(paths[static_cast<size_t>(i)].size()) - 1; }
};

inline bool subdivision_valid(const UndirectedGraph& h, const Subdivision& sub, bool require_odd) {
    auto [u, v, w, x] = sub.branch;
    const std::array<std::pair<int, int>, 6> ends{{{u, v}, {v, w}, {w, u}, {x, u}, {x, v}, {x, w}}};
    std::vector<char> used(static_cast<size_t>(h.size()), 0);
    for (int b : sub.branch) {
        if (b < 0 || b >= h.size() || used[static_cast<size_t>(b)]) return false;
        used[static_cast<size_t>(b)] = 1;
    }
    for (int i = 0; i < 6; ++i) {
        const auto& p = sub.paths[static_cast<size_t>(i)];
        if (p.size() < 2 || p.front() != ends[static_cast<size_t>(i)].first || p.back() != ends[static_cast<size_t>(i)].second)
            return false;
        if (require_odd && sub.length(i) % 2 == 0) return false;
        for (size_t k = 0; k + 1 < p.size(); ++k)
            if (!h.edge(p[k], p[k + 1])) return false;
        for (size_t k = 1; k + 1 < p.size(); ++k) {
            if (used[static_cast<size_t>(p[k])]) return false;  // internal hits branch or another path
            used[static_cast<size_t>(p[k])] = 1;
        }
    }
    return true;
}

namespace detail {

struct Leg {
    int path;      // index into Subdivision::paths
    bool reverse;  // walk the stored sequence backwards
};

inline std::vector<int> compose_cycle(const Subdivision& sub, std::initializer_list<Leg> legs) {
    std::vector<int> out;
    for (const Leg& leg : legs) {
        const auto& p = sub.paths[static_cast<size_t>(leg.path)];
        std::vector<int> seq = leg.reverse ? std::vector<int>(p.rbegin(), p.rend()) : p;
        if (out.empty())
            out = seq;
        else
            out.insert(out.end(), seq.begin() + 1, seq.end());
    }
    out.pop_back();  // closing vertex equals the start
    return out;
}

}  // namespace detail

// The seven cycles through the branch vertices: triangles u-v-w, u-v-x,
// v-w-x, w-u-x (lengths a+b+c, d+e+a, e+f+b, f+d+c), then the quadrilaterals
// w-x-u-v, w-u-v-x, u-w-v-x (lengths f+d+a+b, c+a+e+f, b+c+d+e).
inline std::array<std::vector<int>, 7> fundamental_cycles(const Subdivision& sub) {
    using detail::compose_cycle;
    return {
        compose_cycle(sub, {{0, false}, {1, false}, {2, false}}),
        compose_cycle(sub, {{0, false}, {4, true}, {3, false}}),
        compose_cycle(sub, {{1, false}, {5, true}, {4, false}}),
        compose_cycle(sub, {{2, false}, {3, true}, {5, false}}),
        compose_cycle(sub, {{5, true}, {3, false}, {0, false}, {1, false}}),
        compose_cycle(sub, {{2, false}, {0, false}, {4, true}, {5, false}}),
        compose_cycle(sub, {{2, true}, {1, true}, {4, true}, {3, false}}),
    };
}

struct CycleWitness {
    std::vector<int> vertices;  // cyclic sequence, consecutive (and wrap) adjacent
    int length = 0;
    bool is_odd = false;
    bool is_directed = false;
};

inline CycleWitness cycle_witness(const OrientedGraph& g, std::vector<int> cyc) {
    CycleWitness wit;
    wit.length = static_cast<int>(cyc.size());
    wit.is_odd = wit.length % 2 == 1;
    bool all_forward = true, all_backward = true;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        bool fwd = g.edge(a, b), bwd = g.edge(b, a);
        if (!fwd && !bwd) throw VerificationFailed("cycle witness has a non-adjacent consecutive pair");
        all_forward = all_forward && fwd;
        all_backward = all_backward && bwd;
    }
    wit.is_directed = all_forward || all_backward;
    wit.vertices = std::move(cyc);
    return wit;
}

// First odd fundamental cycle that is not directed, in the fixed cycle
// order. The underlying subdivision must be non-bipartite (some fundamental
// cycle odd); an orientation of such a subdivision always has one.
inline CycleWitness find_inconsistent_odd_cycle(const OrientedGraph& oriented, const Subdivision& sub) {
    bool any_odd = false;
    for (const auto& cyc : fundamental_cycles(sub)) {
        if (cyc.size() % 2 == 0) continue;
        any_odd = true;
        CycleWitness wit = cycle_witness(oriented, cyc);
        if (!wit.is_directed) return wit;
    }
    if (!any_odd) throw NoOddCycle("subdivision is bipartite: every fundamental cycle is even");
    throw VerificationFailed("every odd fundamental cycle is directed");
}

namespace detail {

class OddK4Search {
public:
    explicit OddK4Search(const UndirectedGraph& h) : h_(h), n_(h.size()), used_(n_) {}

    std::optional<Subdivision> run() {
        for (int b0 = 0; b0 < n_; ++b0)
            for (int b1 = b0 + 1; b1 < n_; ++b1)
                for (int b2 = b1 + 1; b2 < n_; ++b2)
                    for (int b3 = b2 + 1; b3 < n_; ++b3) {
                        sub_.branch = {b0, b1, b2, b3};
                        used_ = Bits(n_);
                        for (int b : sub_.branch) used_.set(b);
                        if (place_paths(0)) return sub_;
                    }
        return std::nullopt;
    }

private:
    static constexpr std::array<std::pair<int, int>, 6> kEnds{
        {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}};

    bool place_paths(int idx) {
        if (idx == 6) return true;
        auto [si, ti] = kEnds[static_cast<size_t>(idx)];
        int s = sub_.branch[static_cast<size_t>(si)], t = sub_.branch[static_cast<size_t>(ti)];
        auto& path = sub_.paths[static_cast<size_t>(idx)];
        path.assign(1, s);
        return extend_path(idx, s, t);
    }

    // Grow a simple path of odd length from s to t; internal vertices avoid
    // branch vertices and everything used by earlier paths.
    bool extend_path(int idx, int at, int t) {
        auto& path = sub_.paths[static_cast<size_t>(idx)];
        const Bits& row = h_.adj(at);
        for (int w = row.first(); w >= 0; w = row.next(w)) {
            if (w == t) {
                // Closing here gives a path with path.size() edges.
                if (path.size() % 2 == 0) continue;
                path.push_back(t);
                if (place_paths(idx + 1)) return true;
                path.pop_back();
                continue;
            }
            if (used_.test(w)) continue;
            path.push_back(w);
            used_.set(w);
            if (extend_path(idx, w, t)) return true;
            used_.reset(w);
            path.pop_back();
        }
        return false;
    }

    const UndirectedGraph& h_;
    int n_;
    Bits used_;
    Subdivision sub_;
};

}  // namespace detail

// Exhaustive search, branch quadruples ascending, path systems in
// deterministic DFS order. For a 4-chromatic host within the cap a
// subdivision always exists.
inline std::optional<Subdivision> find_odd_k4_subdivision(const UndirectedGraph& h, int max_n = 14) {
    if (h.size() > max_n) throw SizeLimitExceeded("find_odd_k4_subdivision: graph exceeds cap");
    detail::OddK4Search search(h);
    auto sub = search.run();
    if (sub && !subdivision_valid(h, *sub, /*require_odd=*/true))
        throw VerificationFailed("subdivision search produced an invalid subdivision");
    return sub;
}

struct OddCycleLimits {
    SolverLimits solver{};
    int subdivision_max_n = 14;
    bool assume_chromatic_ok = false;  // skip the chi >= 4 check (caller asserts it)
};

// Certificate that an orientation of a graph with chromatic number >= 4 has
// an acyclic subgraph of chromatic number 3: an inconsistent odd cycle.
// The chromatic precondition is verified while the graph fits the coloring
// cap; above it the caller's word is taken.
inline CycleWitness acyclic_3chromatic_subgraph(const OrientedGraph& g, OddCycleLimits limits = {}) {
    UndirectedGraph h = underlying_graph(g);
    if (!limits.assume_chromatic_ok && h.size() <= limits.solver.chromatic_max_n) {
        if (chromatic_number(h, limits.solver).k <= 3)
            throw ChromaticTooLow("underlying graph is 3-colorable; no certificate exists");
    }
    auto sub = find_odd_k4_subdivision(h, limits.subdivision_max_n);
    if (!sub) throw VerificationFailed("no odd K4-subdivision found in a 4-chromatic graph");

    // Orient the subdivision's edges as they are oriented in g.
    OrientedGraph oriented(g.size());
    for (const auto& path : sub->paths)
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            int a = path[k], b = path[k + 1];
            if (oriented.edge(a, b) || oriented.edge(b, a)) continue;
            oriented.add_edge(g.edge(a, b) ? a : b, g.edge(a, b) ? b : a);
        }

    CycleWitness wit = find_inconsistent_odd_cycle(oriented, *sub);

    // Independent re-check of the certificate.
    if (!wit.is_odd || wit.is_directed)
        throw VerificationFailed("witness cycle is not an inconsistent odd cycle");
    OrientedGraph cycle_digraph(g.size());
    UndirectedGraph cycle_graph(g.size());
    for (size_t i = 0; i < wit.vertices.size(); ++i) {
        int a = wit.vertices[i], b = wit.vertices[(i + 1) % wit.vertices.size()];
        cycle_digraph.add_edge(g.edge(a, b) ? a : b, g.edge(a, b) ? b : a);
        cycle_graph.add_edge(std::min(a, b), std::max(a, b));
    }
    if (!is_acyclic(cycle_digraph)) throw VerificationFailed("witness cycle is not acyclic as a digraph");
    VertexSet on_cycle = wit.vertices;
    std::sort(on_cycle.begin(), on_cycle.end());
    if (chromatic_number(cycle_graph.induced(on_cycle), limits.solver).k != 3)
        throw VerificationFailed("witness cycle is not 3-chromatic");
    return wit;
}

}  // namespace acyclo
