#pragma once

// The two spanning acyclic subgraphs induced by a linear order (edges that
// agree with it and edges that oppose it) and the exact maximum chromatic
// number over acyclic subgraphs, computed as a max over all orders.

#include <cstdint>
#include <vector>

#include "acyclo/chromatic.hpp"
#include "acyclo/detail/chain_search.hpp"
#include "acyclo/graph.hpp"
#include "acyclo/rng.hpp"

namespace acyclo {

template <DirectedView G>
OrientedGraph right_subgraph(const G& g, const LinearOrder& pi) {
    if (pi.size() != g.size()) throw DimensionMismatch("order size differs from graph size");
    OrientedGraph r(g.size());
    for (int u = 0; u < g.size(); ++u) {
        const Bits& row = g.out(u);
        for (int v = row.first(); v >= 0; v = row.next(v))
            if (pi.position(u) < pi.position(v)) r.add_edge(u, v);
    }
    return r;
}

template <DirectedView G>
OrientedGraph left_subgraph(const G& g, const LinearOrder& pi) {
    return right_subgraph(g, pi.reversed());
}

struct OrderSplit {
    OrientedGraph right;
    OrientedGraph left;
};

template <DirectedView G>
OrderSplit order_split(const G& g, const LinearOrder& pi) {
    return {right_subgraph(g, pi), left_subgraph(g, pi)};
}

// Underlying graph of the edges agreeing with pi, without materializing the
// intermediate digraph.
template <DirectedView G>
UndirectedGraph right_underlying(const G& g, const LinearOrder& pi) {
    if (pi.size() != g.size()) throw DimensionMismatch("order size differs from graph size");
    UndirectedGraph h(g.size());
    for (int u = 0; u < g.size(); ++u) {
        const Bits& row = g.out(u);
        for (int v = row.first(); v >= 0; v = row.next(v))
            if (pi.position(u) < pi.position(v)) h.add_edge(std::min(u, v), std::max(u, v));
    }
    return h;
}

struct FExactLimits {
    int max_n = 10;
    SolverLimits solver{};
};

namespace detail {

template <DirectedView G>
class FExactSearch {
public:
    FExactSearch(const G& g, const SolverLimits& solver)
        : g_(g), n_(g.size()), solver_(solver), placed_(n_),
          lrows_(static_cast<size_t>(n_), Bits(n_)) {
        prefix_.reserve(static_cast<size_t>(n_));
    }

    int run() {
        if (n_ == 0) return 0;
        dfs();
        return best_;
    }

private:
    void dfs() {
        if (static_cast<int>(prefix_.size()) == n_) {
            LinearOrder pi(prefix_);
            int chi = chromatic_number(right_underlying(g_, pi), solver_).k;
            if (chi > best_) best_ = chi;
            return;
        }
        // A set pairwise opposing the prefix order stays independent in the
        // right graph of every completion, so chi(right) <= n - size + 1.
        int need = n_ - best_ + 1;
        if (need <= static_cast<int>(prefix_.size())) {
            ChainSearch chains(lrows_, n_);
            if (chains.find_exact(placed_, need, {}).has_value()) return;
        }
        for (int v = 0; v < n_; ++v) {
            if (placed_.test(v)) continue;
            lrows_[static_cast<size_t>(v)] = g_.out(v) & placed_;
            placed_.set(v);
            prefix_.push_back(v);
            dfs();
            prefix_.pop_back();
            placed_.reset(v);
            lrows_[static_cast<size_t>(v)] = Bits(n_);
        }
    }

    const G& g_;
    int n_;
    SolverLimits solver_;
    int best_ = 1;
    std::vector<int> prefix_;
    Bits placed_;
    std::vector<Bits> lrows_;  // within-prefix edges opposing the order
};

}  // namespace detail

// Maximum over all linear orders of chi(underlying(right_subgraph)); equals
// the maximum chromatic number over all acyclic edge-subsets, since every
// acyclic subgraph embeds in the right graph of one of its topological
// orders. Orders are enumerated lexicographically; subtrees that provably
// cannot beat the incumbent are skipped.
template <DirectedView G>
int f_exact(const G& g, FExactLimits limits = {}) {
    if (g.size() > limits.max_n) throw SizeLimitExceeded("f_exact: graph exceeds cap");
    if (g.size() == 0) return 0;
    detail::FExactSearch<G> search(g, limits.solver);
    return search.run();
}

// Max of chi(right) over the identity order plus `samples` seeded random
// orders. Always a lower bound for f_exact.
template <DirectedView G>
int f_lower_heuristic(const G& g, int samples, std::uint64_t seed, SolverLimits solver = {}) {
    if (samples < 1) throw PreconditionViolated("f_lower_heuristic: samples must be >= 1");
    if (g.size() == 0) return 0;
    int best = chromatic_number(right_underlying(g, LinearOrder::identity(g.size())), solver).k;
    SplitMix64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        LinearOrder pi = random_order(g.size(), rng);
        best = std::max(best, chromatic_number(right_underlying(g, pi), solver).k);
    }
    return best;
}

}  // namespace acyclo
