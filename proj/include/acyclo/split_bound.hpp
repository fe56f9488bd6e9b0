#pragma once

// Six-part ordering: pick an edge (u, v) lying on the fewest cyclic
// triangles, let Q be the apex set completing it to cyclic triangles, order Q
// by a destroyer ordering of the induced subtournament, and lay the vertices
// out as  X, v, Y, u, Q, rest  with X = N+(u) n N+(v), Y = N+(u) n N-(v).
// Under that order u opposes every other vertex and the right-graph
// neighborhood of v is exactly Q, which forces one side of the split to need
// more than n colors once the tournament is large enough.

#include <cmath>
#include <vector>

#include "acyclo/chromatic.hpp"
#include "acyclo/destroyer.hpp"
#include "acyclo/orderings.hpp"
#include "acyclo/triangles.hpp"

namespace acyclo {

struct SixParts {
    int u = -1, v = -1;
    int q = 0;
    VertexSet X, Y, Q;            // ascending
    std::vector<int> q_order;     // Q in destroyer order (graph vertex ids)
    LinearOrder pi;
};

inline SixParts six_part_ordering(const Tournament& g, int destroyer_max_n = 40) {
    int t = g.size();
    if (t < 2) throw PreconditionViolated("six_part_ordering: need at least one edge");

    SixParts parts;
    MinCyclicEdge e = min_cyclic_edge(g);
    parts.u = e.u;
    parts.v = e.v;
    parts.q = e.q;

    Bits in_u = g.in(parts.u);
    Bits in_v = g.in(parts.v);
    parts.X = (g.out(parts.u) & g.out(parts.v)).to_vector();
    parts.Y = (g.out(parts.u) & in_v).to_vector();
    parts.Q = (g.out(parts.v) & in_u).to_vector();
    if (static_cast<int>(parts.Q.size()) != parts.q)
        throw VerificationFailed("apex set size disagrees with the triangle census");

    if (!parts.Q.empty()) {
        Tournament sub = g.induced(parts.Q);
        DestroyerTrace trace = destroyer_ordering(sub, destroyer_max_n);
        parts.q_order.reserve(parts.Q.size());
        for (int k = 0; k < trace.pi.size(); ++k)
            parts.q_order.push_back(parts.Q[static_cast<size_t>(trace.pi.at(k))]);
    }

    std::vector<int> order;
    order.reserve(static_cast<size_t>(t));
    for (int w : parts.X) order.push_back(w);
    order.push_back(parts.v);
    for (int w : parts.Y) order.push_back(w);
    order.push_back(parts.u);
    for (int w : parts.q_order) order.push_back(w);
    Bits rest = in_u;
    for (int w : parts.Q) rest.reset(w);
    for (int w = rest.first(); w >= 0; w = rest.next(w)) order.push_back(w);
    parts.pi = LinearOrder(order);

    // Structural facts the construction relies on.
    OrientedGraph right = right_subgraph(g, parts.pi);
    OrientedGraph left = left_subgraph(g, parts.pi);
    if (left.out_degree(parts.u) + left.in_degree(parts.u) != t - 1)
        throw VerificationFailed("u is not adjacent to all vertices in the left graph");
    Bits v_right = right.out(parts.v) | right.in(parts.v);
    Bits q_bits(t);
    for (int w : parts.Q) q_bits.set(w);
    if (v_right != q_bits)
        throw VerificationFailed("right-graph neighborhood of v is not exactly Q");

    return parts;
}

struct SplitBoundReport {
    int m = 0;           // tournament size
    int n = 0;           // color budget being contradicted
    int chi_right = 0;
    int chi_left = 0;
    bool holds = false;  // max(chi_right, chi_left) >= n + 1
};

inline int split_bound_min_size(int n) {
    // n^2 - ceil((2 - 1/sqrt(2)) n) + 3
    long double c = 2.0L - 1.0L / std::sqrt(2.0L);
    long long ceil_term = static_cast<long long>(std::ceil(c * static_cast<long double>(n)));
    return static_cast<int>(static_cast<long long>(n) * n - ceil_term + 3);
}

// For m >= n^2 - ceil((2 - 1/sqrt(2)) n) + 3 and n >= 3, one side of the
// six-part split always needs more than n colors.
inline SplitBoundReport verify_split_bound(const Tournament& g, int n, SolverLimits solver = {}) {
    SplitBoundReport report;
    report.m = g.size();
    report.n = n;
    if (n < 3) throw PreconditionViolated("verify_split_bound: n must be >= 3");
    if (report.m < split_bound_min_size(n))
        throw PreconditionViolated("verify_split_bound: tournament smaller than the bound threshold");
    SixParts parts = six_part_ordering(g);
    report.chi_right = chromatic_number(right_underlying(g, parts.pi), solver).k;
    report.chi_left = chromatic_number(right_underlying(g, parts.pi.reversed()), solver).k;
    report.holds = std::max(report.chi_right, report.chi_left) >= n + 1;
    return report;
}

}  // namespace acyclo
