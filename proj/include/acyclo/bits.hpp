#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace acyclo {

// Set of vertex ids over a fixed universe 0..n-1, one bit per id.
// The word-parallel intersection ops are what the exact solvers live on.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_(static_cast<size_t>((n + 63) >> 6), 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // Lowest member, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k << 6) + std::countr_zero(w_[k]);
        return -1;
    }

    // Lowest member greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t k = static_cast<size_t>(i) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k << 6) + std::countr_zero(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // this = this \ o
    Bits& and_not(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    // Complement within the universe.
    void flip() {
        for (auto& w : w_) w = ~w;
        trim();
    }

    friend Bits operator&(Bits a, const Bits& b) {
        a &= b;
        return a;
    }
    friend Bits operator|(Bits a, const Bits& b) {
        a |= b;
        return a;
    }

    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const Bits&) const = default;

private:
    void trim() {
        if (n_ & 63) w_.back() &= ~std::uint64_t{0} >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace acyclo
