#pragma once

// Search for vertex sets inducing a transitive tournament inside a digraph,
// viewed as "chains": orderings v1, v2, ... where every earlier vertex has an
// edge to every later one. Each such set has exactly one chain order, so
// enumerating chains with candidate set = common out-neighborhood visits each
// set once. Branching follows descending out-degree, ties by lowest id.

#include <algorithm>
#include <optional>
#include <vector>

#include "acyclo/bits.hpp"

namespace acyclo::detail {

class ChainSearch {
public:
    ChainSearch(const std::vector<Bits>& out, int n) : out_(out), n_(n) {
        branch_order_.reserve(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) branch_order_.push_back(v);
        std::vector<int> deg(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) deg[static_cast<size_t>(v)] = out_[static_cast<size_t>(v)].count();
        std::stable_sort(branch_order_.begin(), branch_order_.end(),
                         [&](int a, int b) { return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]; });
    }

    // Longest chain in beat order (first element has edges to all later ones).
    std::vector<int> longest(const Bits& candidates) {
        best_.clear();
        cur_.clear();
        grow_longest(candidates);
        return best_;
    }

    // First chain of exact size s intersecting each forbidden set in at most
    // one vertex, in deterministic branch order; nullopt when none exists.
    std::optional<std::vector<int>> find_exact(const Bits& candidates, int s,
                                               const std::vector<Bits>& forbidden) {
        best_.clear();
        cur_.clear();
        target_ = s;
        forbidden_ = &forbidden;
        forb_used_.assign(forbidden.size(), 0);
        if (s == 0) return std::vector<int>{};
        bool ok = grow_exact(candidates);
        forbidden_ = nullptr;
        if (ok) return best_;
        return std::nullopt;
    }

private:
    void grow_longest(const Bits& cands) {
        if (cur_.size() > best_.size()) best_ = cur_;
        if (static_cast<int>(cur_.size()) + cands.count() <= static_cast<int>(best_.size())) return;
        for (int v : branch_order_) {
            if (!cands.test(v)) continue;
            cur_.push_back(v);
            grow_longest(cands & out_[static_cast<size_t>(v)]);
            cur_.pop_back();
        }
    }

    bool grow_exact(const Bits& cands) {
        if (static_cast<int>(cur_.size()) == target_) {
            best_ = cur_;
            return true;
        }
        if (static_cast<int>(cur_.size()) + cands.count() < target_) return false;
        for (int v : branch_order_) {
            if (!cands.test(v)) continue;
            // A vertex may sit in several forbidden sets; it is usable only
            // while none of them has a member in the chain yet.
            bool blocked = false;
            std::vector<int> marked;
            for (size_t f = 0; f < forbidden_->size(); ++f)
                if ((*forbidden_)[f].test(v)) {
                    if (forb_used_[f]) {
                        blocked = true;
                        break;
                    }
                    marked.push_back(static_cast<int>(f));
                }
            if (blocked) continue;
            for (int f : marked) forb_used_[static_cast<size_t>(f)] = 1;
            Bits next = cands & out_[static_cast<size_t>(v)];
            for (int f : marked) next.and_not((*forbidden_)[static_cast<size_t>(f)]);
            cur_.push_back(v);
            bool found = grow_exact(next);
            cur_.pop_back();
            for (int f : marked) forb_used_[static_cast<size_t>(f)] = 0;
            if (found) return true;
        }
        return false;
    }

    const std::vector<Bits>& out_;
    int n_;
    std::vector<int> branch_order_;
    std::vector<int> cur_, best_;
    int target_ = 0;
    const std::vector<Bits>* forbidden_ = nullptr;
    std::vector<char> forb_used_;
};

}  // namespace acyclo::detail
