#pragma once

// Tournament on the grid [n]^2: within a row the edge goes from the higher
// column to the lower one, across rows it goes toward the higher column, and
// within a column toward the higher row. Rows induce transitive tournaments
// oriented right-to-left; any set with distinct rows and increasing columns
// is a left-to-right transitive tournament.
//
// Also here: the interval lemma on grid point sets (any 2n points contain
// two same-row pairs whose column intervals share two integers), and the
// cover of a right graph by transitive tournaments, which is a proper
// coloring of the matching left graph.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "acyclo/chromatic.hpp"
#include "acyclo/graph.hpp"
#include "acyclo/orderings.hpp"

namespace acyclo {

struct GridPoint {
    int x = 0;  // column, 1..n
    int y = 0;  // row, 1..n
    bool operator==(const GridPoint&) const = default;
};

inline int grid_vertex_id(GridPoint p, int n) { return (p.y - 1) * n + (p.x - 1); }
inline GridPoint grid_point_of(int id, int n) { return {id % n + 1, id / n + 1}; }

inline Tournament grid_tournament(int n, int size_cap = kDefaultSizeCap) {
    if (n < 1) throw PreconditionViolated("grid_tournament: n must be >= 1");
    if (static_cast<long long>(n) * n > size_cap) throw SizeLimitExceeded("grid_tournament: n^2 exceeds cap");
    int t = n * n;
    std::vector<Bits> rows(static_cast<size_t>(t), Bits(t));
    for (int a = 0; a < t; ++a) {
        GridPoint p = grid_point_of(a, n);
        for (int b = 0; b < t; ++b) {
            if (a == b) continue;
            GridPoint r = grid_point_of(b, n);
            bool edge = (p.x < r.x && p.y != r.y) || (p.x > r.x && p.y == r.y) || (p.x == r.x && p.y < r.y);
            if (edge) rows[static_cast<size_t>(a)].set(b);
        }
    }
    return Tournament(std::move(rows));
}

// Two points in a lower row and two in a higher row whose column intervals
// share at least two integers.
struct Quadruple {
    GridPoint a, b;  // same row, a.x < b.x
    GridPoint c, d;  // same higher row, c.x < d.x
};

inline bool quadruple_valid(const Quadruple& q) {
    if (q.a.y != q.b.y || q.c.y != q.d.y || q.a.y >= q.c.y) return false;
    if (q.a.x >= q.b.x || q.c.x >= q.d.x) return false;
    int lo = std::max(q.a.x, q.c.x);
    int hi = std::min(q.b.x, q.d.x);
    return hi - lo >= 1;
}

namespace detail {

inline void check_grid_points(const std::vector<GridPoint>& points, int n) {
    std::vector<GridPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](GridPoint a, GridPoint b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].x < 1 || sorted[i].x > n || sorted[i].y < 1 || sorted[i].y > n)
            throw PreconditionViolated("grid point outside [n]^2");
        if (i && sorted[i] == sorted[i - 1]) throw PreconditionViolated("duplicate grid point");
    }
}

}  // namespace detail

// Guaranteed to succeed when |points| >= 2n: the per-row column intervals
// then have total size >= 2n, and n intervals in [1, n] with pairwise
// intersections of at most one integer cover at most 2n - 1.
inline std::optional<Quadruple> find_interval_quadruple(const std::vector<GridPoint>& points, int n) {
    detail::check_grid_points(points, n);
    std::vector<int> lo(static_cast<size_t>(n) + 1, 0), hi(static_cast<size_t>(n) + 1, 0);
    for (const GridPoint& p : points) {
        size_t r = static_cast<size_t>(p.y);
        if (lo[r] == 0) {
            lo[r] = hi[r] = p.x;
        } else {
            lo[r] = std::min(lo[r], p.x);
            hi[r] = std::max(hi[r], p.x);
        }
    }
    for (int r = 1; r <= n; ++r) {
        if (lo[static_cast<size_t>(r)] == 0) continue;
        for (int s = r + 1; s <= n; ++s) {
            if (lo[static_cast<size_t>(s)] == 0) continue;
            int l = std::max(lo[static_cast<size_t>(r)], lo[static_cast<size_t>(s)]);
            int h = std::min(hi[static_cast<size_t>(r)], hi[static_cast<size_t>(s)]);
            if (h - l >= 1) {
                Quadruple q{{lo[static_cast<size_t>(r)], r}, {hi[static_cast<size_t>(r)], r},
                            {lo[static_cast<size_t>(s)], s}, {hi[static_cast<size_t>(s)], s}};
                if (!quadruple_valid(q)) throw VerificationFailed("constructed quadruple fails its invariants");
                return q;
            }
        }
    }
    return std::nullopt;
}

// The 2n-1 points (i,i),(i+1,i) for i=1..n-1 plus (n,n): the largest sets
// with no interval quadruple.
inline std::vector<GridPoint> points_tightness_example(int n) {
    if (n < 2) throw PreconditionViolated("points_tightness_example: n must be >= 2");
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<size_t>(2 * n - 1));
    for (int i = 1; i < n; ++i) {
        pts.push_back({i, i});
        pts.push_back({i + 1, i});
    }
    pts.push_back({n, n});
    return pts;
}

// Auxiliary digraph on the union S of per-row longest increasing column
// sequences (taken in pi order): edges go to higher columns, other rows, and
// later pi positions; split into row-increasing and row-decreasing parts.
// Any directed path in either part is a clique of the right graph.
struct AuxDigraph {
    VertexSet S;
    std::vector<std::pair<int, int>> up_edges;    // row increases
    std::vector<std::pair<int, int>> down_edges;  // row decreases
};

inline AuxDigraph build_aux_digraph(int n, const VertexSet& Y, const LinearOrder& pi) {
    AuxDigraph aux;
    // Longest increasing column subsequence per row, members taken in pi order.
    std::vector<std::vector<int>> by_row(static_cast<size_t>(n) + 1);
    for (int v : Y) by_row[static_cast<size_t>(grid_point_of(v, n).y)].push_back(v);
    for (int r = 1; r <= n; ++r) {
        auto& members = by_row[static_cast<size_t>(r)];
        if (members.empty()) continue;
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return pi.position(a) < pi.position(b); });
        std::vector<int> xs;
        xs.reserve(members.size());
        for (int v : members) xs.push_back(grid_point_of(v, n).x);
        for (int idx : longest_monotone_indices(xs, Monotone::increasing))
            aux.S.push_back(members[static_cast<size_t>(idx)]);
    }
    std::sort(aux.S.begin(), aux.S.end());
    for (int p : aux.S) {
        GridPoint gp = grid_point_of(p, n);
        for (int q : aux.S) {
            GridPoint gq = grid_point_of(q, n);
            if (gp.x < gq.x && gp.y != gq.y && pi.position(p) < pi.position(q)) {
                if (gp.y < gq.y)
                    aux.up_edges.emplace_back(p, q);
                else
                    aux.down_edges.emplace_back(p, q);
            }
        }
    }
    return aux;
}

namespace detail {

// Longest directed path (as vertices) in an edge list whose edges all agree
// with pi; DP over pi positions.
inline std::vector<int> longest_path_along(const std::vector<int>& verts,
                                           const std::vector<std::pair<int, int>>& edges,
                                           const LinearOrder& pi) {
    std::vector<int> order = verts;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pi.position(a) < pi.position(b); });
    std::vector<int> rank(static_cast<size_t>(pi.size()), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> in_edges(order.size());
    for (auto [p, q] : edges) in_edges[static_cast<size_t>(rank[static_cast<size_t>(q)])].push_back(p);
    std::vector<int> len(order.size(), 1), prev(order.size(), -1);
    int best = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        for (int p : in_edges[i]) {
            int pr = rank[static_cast<size_t>(p)];
            if (len[static_cast<size_t>(pr)] + 1 > len[i]) {
                len[i] = len[static_cast<size_t>(pr)] + 1;
                prev[i] = pr;
            }
        }
        if (best < 0 || len[i] > len[static_cast<size_t>(best)]) best = static_cast<int>(i);
    }
    std::vector<int> path;
    for (int i = best; i >= 0; i = prev[static_cast<size_t>(i)]) path.push_back(order[static_cast<size_t>(i)]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

inline bool is_right_clique(const Tournament& g, const LinearOrder& pi, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            int a = s[i], b = s[j];
            if (pi.position(a) > pi.position(b)) std::swap(a, b);
            if (!g.edge(a, b)) return false;
        }
    return true;
}

// Clique of the right graph of size >= k_min inside Y, if the row/path
// machinery finds one. Phase A: per-row longest decreasing column sequence
// in pi order (a row clique). Phase B: longest directed path in either part
// of the auxiliary digraph.
inline std::optional<VertexSet> find_large_transitive(int n, const Tournament& gn, const VertexSet& Y,
                                                      const LinearOrder& pi, int k_min) {
    if (gn.size() != n * n || pi.size() != gn.size())
        throw DimensionMismatch("find_large_transitive: sizes disagree");
    auto finish = [&](VertexSet set) -> std::optional<VertexSet> {
        if (!is_right_clique(gn, pi, set))
            throw VerificationFailed("claimed transitive set is not a right-graph clique");
        return set;
    };

    std::vector<std::vector<int>> by_row(static_cast<size_t>(n) + 1);
    for (int v : Y) by_row[static_cast<size_t>(grid_point_of(v, n).y)].push_back(v);
    for (int r = 1; r <= n; ++r) {
        auto& members = by_row[static_cast<size_t>(r)];
        if (static_cast<int>(members.size()) < k_min) continue;
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return pi.position(a) < pi.position(b); });
        std::vector<int> xs;
        xs.reserve(members.size());
        for (int v : members) xs.push_back(grid_point_of(v, n).x);
        auto idx = longest_monotone_indices(xs, Monotone::decreasing);
        if (static_cast<int>(idx.size()) >= k_min) {
            VertexSet set;
            for (int i : idx) set.push_back(members[static_cast<size_t>(i)]);
            return finish(std::move(set));
        }
    }

    AuxDigraph aux = build_aux_digraph(n, Y, pi);
    std::vector<int> up = detail::longest_path_along(aux.S, aux.up_edges, pi);
    std::vector<int> down = detail::longest_path_along(aux.S, aux.down_edges, pi);
    std::vector<int>& longer = up.size() >= down.size() ? up : down;
    if (static_cast<int>(longer.size()) >= k_min) return finish(std::move(longer));
    return std::nullopt;
}

struct CoverFamily {
    std::vector<VertexSet> parts;
    LinearOrder pi;
};

struct CoverLimits {
    int max_n = 10;          // grid side
    int clique_max_n = 64;   // exact extraction threshold
};

inline int cover_min_part_size(int n) {
    // ceil(n^(1/4) / 2): smallest k with (2k)^4 >= n
    int k = 1;
    while (16LL * k * k * k * k < n) ++k;
    return k;
}

inline long long cover_part_bound(int n) {
    return static_cast<long long>(std::floor(3.0L * std::pow(static_cast<long double>(n), 1.75L)));
}

inline bool cover_is_valid(const Tournament& gn, const CoverFamily& cover) {
    Bits seen(gn.size());
    for (const VertexSet& part : cover.parts) {
        if (part.empty()) return false;
        for (int v : part) {
            if (v < 0 || v >= gn.size() || seen.test(v)) return false;
            seen.set(v);
        }
        if (!is_right_clique(gn, cover.pi, part)) return false;
    }
    return seen.count() == gn.size();
}

// Greedily peel cliques of the right graph of size >= ceil(n^(1/4)/2), exact
// max clique while the residue fits the cap, the row/path accelerator above
// it; whatever remains becomes singletons. The parts are independent sets of
// the left graph, i.e. a proper coloring of it, with at most 3 n^(7/4) parts.
inline CoverFamily cover_by_transitive(int n, const LinearOrder& pi, CoverLimits limits = {}) {
    if (n < 1) throw PreconditionViolated("cover_by_transitive: n must be >= 1");
    if (n > limits.max_n) throw SizeLimitExceeded("cover_by_transitive: n exceeds cap");
    Tournament gn = grid_tournament(n);
    if (pi.size() != gn.size()) throw DimensionMismatch("cover_by_transitive: order size differs from n^2");

    int k_min = cover_min_part_size(n);
    CoverFamily cover;
    cover.pi = pi;
    Bits residue(gn.size());
    for (int v = 0; v < gn.size(); ++v) residue.set(v);

    UndirectedGraph right = right_underlying(gn, pi);
    while (residue.any()) {
        VertexSet live = residue.to_vector();
        VertexSet part;
        if (static_cast<int>(live.size()) <= limits.clique_max_n) {
            VertexSet local = max_clique(right.induced(live), limits.clique_max_n);
            if (static_cast<int>(local.size()) < k_min) break;
            for (int i : local) part.push_back(live[static_cast<size_t>(i)]);
        } else {
            auto found = find_large_transitive(n, gn, live, pi, k_min);
            if (!found) break;
            part = std::move(*found);
        }
        for (int v : part) residue.reset(v);
        cover.parts.push_back(std::move(part));
    }
    for (int v = residue.first(); v >= 0; v = residue.next(v)) cover.parts.push_back({v});

    if (!cover_is_valid(gn, cover))
        throw VerificationFailed("cover is not a partition into right-graph cliques");
    if (static_cast<long long>(cover.parts.size()) > cover_part_bound(n))
        throw VerificationFailed("cover exceeds the 3 n^(7/4) part bound");
    return cover;
}

}  // namespace acyclo
