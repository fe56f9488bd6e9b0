#pragma once

// Exact chromatic number / k-colorability (DSATUR-style branch and bound,
// clique-seeded, symmetry broken by "first use of a new color only"),
// exact maximum clique (greedy-coloring-bounded branch and bound), and
// longest strictly monotone subsequence (patience method).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acyclo/graph.hpp"

namespace acyclo {

struct Coloring {
    std::vector<int> color;  // per vertex, 0..k-1
    int k = 0;               // number of colors used
};

struct SolverLimits {
    int chromatic_max_n = 40;
    int clique_max_n = 64;
    long long budget_ms = 0;  // 0 = no wall-clock budget
};

// Proper, compact (all of 0..k-1 used), every vertex colored.
inline bool is_proper_coloring(const UndirectedGraph& g, const Coloring& c) {
    int n = g.size();
    if (static_cast<int>(c.color.size()) != n) return false;
    std::vector<char> used(static_cast<size_t>(std::max(c.k, 1)), 0);
    for (int v = 0; v < n; ++v) {
        int col = c.color[static_cast<size_t>(v)];
        if (col < 0 || col >= c.k) return false;
        used[static_cast<size_t>(col)] = 1;
    }
    for (int col = 0; col < c.k; ++col)
        if (!used[static_cast<size_t>(col)]) return false;
    for (auto [u, v] : g.edges())
        if (c.color[static_cast<size_t>(u)] == c.color[static_cast<size_t>(v)]) return false;
    return true;
}

namespace detail {

struct Deadline {
    std::chrono::steady_clock::time_point end{};
    bool enabled = false;
    mutable int tick = 0;

    static Deadline after_ms(long long ms) {
        Deadline d;
        if (ms > 0) {
            d.enabled = true;
            d.end = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        }
        return d;
    }

    void poll() const {
        if (!enabled) return;
        if ((++tick & 1023) == 0 && std::chrono::steady_clock::now() > end)
            throw TimeoutExceeded("solver wall-clock budget exhausted");
    }
};

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const UndirectedGraph& g, Deadline dl) : g_(g), n_(g.size()), dl_(dl) {}

    std::vector<int> run() {
        Bits p(n_);
        for (int v = 0; v < n_; ++v) p.set(v);
        expand(p);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(const Bits& p) {
        dl_.poll();
        if (p.none()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        // Greedy coloring of the candidate set; a vertex in color class c
        // cannot head a clique extension larger than c.
        std::vector<int> order;
        std::vector<int> bound;
        order.reserve(static_cast<size_t>(p.count()));
        bound.reserve(order.capacity());
        Bits rest = p;
        int c = 0;
        while (rest.any()) {
            ++c;
            Bits avail = rest;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                bound.push_back(c);
                rest.reset(v);
                avail.reset(v);
                avail.and_not(g_.adj(v));
            }
        }
        Bits pl = p;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (static_cast<int>(cur_.size()) + bound[static_cast<size_t>(idx)] <=
                static_cast<int>(best_.size()))
                return;
            int v = order[static_cast<size_t>(idx)];
            cur_.push_back(v);
            expand(pl & g_.adj(v));
            cur_.pop_back();
            pl.reset(v);
        }
    }

    const UndirectedGraph& g_;
    int n_;
    Deadline dl_;
    std::vector<int> cur_, best_;
};

// Backtracking k-coloring. Branch vertex: max saturation, tie lowest id.
// Colors limited to 64 (enough for the n <= 40/64 caps).
class KColoringSearch {
public:
    KColoringSearch(const UndirectedGraph& g, int k, Deadline dl)
        : g_(g), n_(g.size()), k_(k), dl_(dl),
          color_(static_cast<size_t>(n_), -1),
          forb_(static_cast<size_t>(n_), 0),
          cnt_(static_cast<size_t>(n_)) {
        for (auto& a : cnt_) a.fill(0);
        kmask_ = (k_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k_) - 1);
    }

    std::optional<std::vector<int>> run(const std::vector<int>& seed_clique) {
        if (static_cast<int>(seed_clique.size()) > k_) return std::nullopt;
        int used = 0;
        for (int v : seed_clique) assign(v, used++);
        if (dfs(static_cast<int>(seed_clique.size()), used)) return color_;
        return std::nullopt;
    }

private:
    bool dfs(int colored, int used) {
        dl_.poll();
        if (colored == n_) return true;
        int v = -1, best_sat = -1;
        for (int u = 0; u < n_; ++u) {
            if (color_[static_cast<size_t>(u)] >= 0) continue;
            int sat = std::popcount(forb_[static_cast<size_t>(u)] & kmask_);
            if (sat > best_sat) {
                best_sat = sat;
                v = u;
            }
        }
        if (best_sat >= k_) return false;
        std::uint64_t avail = ~forb_[static_cast<size_t>(v)] & kmask_;
        int limit = std::min(k_, used + 1);  // at most one brand-new color
        if (limit < 64) avail &= (std::uint64_t{1} << limit) - 1;
        while (avail) {
            int c = std::countr_zero(avail);
            avail &= avail - 1;
            assign(v, c);
            if (dfs(colored + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }

    void assign(int v, int c) {
        color_[static_cast<size_t>(v)] = c;
        const Bits& row = g_.adj(v);
        for (int u = row.first(); u >= 0; u = row.next(u))
            if (cnt_[static_cast<size_t>(u)][static_cast<size_t>(c)]++ == 0)
                forb_[static_cast<size_t>(u)] |= std::uint64_t{1} << c;
    }

    void unassign(int v, int c) {
        color_[static_cast<size_t>(v)] = -1;
        const Bits& row = g_.adj(v);
        for (int u = row.first(); u >= 0; u = row.next(u))
            if (--cnt_[static_cast<size_t>(u)][static_cast<size_t>(c)] == 0)
                forb_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << c);
    }

    const UndirectedGraph& g_;
    int n_, k_;
    Deadline dl_;
    std::uint64_t kmask_;
    std::vector<int> color_;
    std::vector<std::uint64_t> forb_;
    std::vector<std::array<std::uint8_t, 64>> cnt_;
};

}  // namespace detail

// Exact maximum clique, ascending vertex ids.
inline VertexSet max_clique(const UndirectedGraph& g, int max_n = 64, long long budget_ms = 0) {
    if (g.size() > max_n) throw SizeLimitExceeded("max_clique: graph exceeds cap");
    detail::MaxCliqueSearch search(g, detail::Deadline::after_ms(budget_ms));
    return search.run();
}

// DSATUR greedy; proper and compact but not necessarily optimal.
inline Coloring greedy_coloring(const UndirectedGraph& g) {
    int n = g.size();
    Coloring c;
    c.color.assign(static_cast<size_t>(n), -1);
    std::vector<std::uint64_t> forb(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1;
        for (int u = 0; u < n; ++u) {
            if (c.color[static_cast<size_t>(u)] >= 0) continue;
            int sat = std::popcount(forb[static_cast<size_t>(u)]);
            if (sat > best_sat) {
                best_sat = sat;
                v = u;
            }
        }
        int col = std::countr_one(forb[static_cast<size_t>(v)]);
        c.color[static_cast<size_t>(v)] = col;
        c.k = std::max(c.k, col + 1);
        const Bits& row = g.adj(v);
        for (int u = row.first(); u >= 0; u = row.next(u)) forb[static_cast<size_t>(u)] |= std::uint64_t{1} << col;
    }
    return c;
}

// True iff a proper k-coloring exists; the witness is compacted so that
// witness.k = number of colors actually used.
inline std::optional<Coloring> is_k_colorable(const UndirectedGraph& g, int k, SolverLimits limits = {}) {
    int n = g.size();
    if (n > limits.chromatic_max_n) throw SizeLimitExceeded("is_k_colorable: graph exceeds cap");
    if (k < 0) throw PreconditionViolated("is_k_colorable: k must be >= 0");
    if (n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    if (k > 64) k = 64;  // n <= 40, so 64 colors always suffice when k allows them
    auto dl = detail::Deadline::after_ms(limits.budget_ms);
    std::vector<int> clique = max_clique(g, limits.clique_max_n, limits.budget_ms);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;
    detail::KColoringSearch search(g, k, dl);
    auto colors = search.run(clique);
    if (!colors) return std::nullopt;
    // Compact color ids in order of first appearance.
    std::vector<int> remap(64, -1);
    Coloring out;
    out.color.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int c = (*colors)[static_cast<size_t>(v)];
        if (remap[static_cast<size_t>(c)] < 0) remap[static_cast<size_t>(c)] = out.k++;
        out.color[static_cast<size_t>(v)] = remap[static_cast<size_t>(c)];
    }
    return out;
}

// Exact chromatic number with an optimal coloring as witness.
inline Coloring chromatic_number(const UndirectedGraph& g, SolverLimits limits = {}) {
    int n = g.size();
    if (n > limits.chromatic_max_n) throw SizeLimitExceeded("chromatic_number: graph exceeds cap");
    if (n == 0) return Coloring{};
    auto dl = detail::Deadline::after_ms(limits.budget_ms);
    std::vector<int> clique = max_clique(g, limits.clique_max_n, limits.budget_ms);
    int lb = static_cast<int>(clique.size());
    Coloring greedy = greedy_coloring(g);
    if (greedy.k == lb) return greedy;
    try {
        for (int k = lb; k < greedy.k; ++k) {
            detail::KColoringSearch search(g, k, dl);
            if (auto colors = search.run(clique)) {
                Coloring out;
                out.color = *colors;
                for (int v = 0; v < n; ++v) out.k = std::max(out.k, out.color[static_cast<size_t>(v)] + 1);
                return out;
            }
        }
    } catch (const TimeoutExceeded&) {
        throw TimeoutExceeded("chromatic_number: budget exhausted with bounds [" + std::to_string(lb) + ", " +
                              std::to_string(greedy.k) + "]");
    }
    return greedy;
}

enum class Monotone { increasing, decreasing };

// Indices of one longest strictly monotone subsequence. Elements must be
// distinct. Patience method, O(r log r).
inline std::vector<int> longest_monotone_indices(std::span<const int> seq, Monotone dir) {
    {
        std::vector<int> sorted(seq.begin(), seq.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionViolated("longest_monotone_indices: elements must be distinct");
    }
    int r = static_cast<int>(seq.size());
    auto key = [&](int i) { return dir == Monotone::increasing ? seq[static_cast<size_t>(i)] : -seq[static_cast<size_t>(i)]; };
    std::vector<int> tails;  // tails[L] = index of smallest attainable end of a length-(L+1) run
    std::vector<int> parent(static_cast<size_t>(r), -1);
    for (int i = 0; i < r; ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), key(i),
                                   [&](int idx, int value) { return key(idx) < value; });
        if (it != tails.begin()) parent[static_cast<size_t>(i)] = *(it - 1);
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
    }
    std::vector<int> out;
    if (tails.empty()) return out;
    for (int i = tails.back(); i >= 0; i = parent[static_cast<size_t>(i)]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::vector<int> longest_monotone_subsequence(std::span<const int> seq, Monotone dir) {
    std::vector<int> out;
    for (int i : longest_monotone_indices(seq, dir)) out.push_back(seq[static_cast<size_t>(i)]);
    return out;
}

}  // namespace acyclo
