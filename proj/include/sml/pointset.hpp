#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sml/errors.hpp"

namespace sml {

/// Finite subset of a ground {0,...,n-1}, stored as a bitset. Value type;
/// every operation requires matching universe sizes.
class PointSet {
public:
    PointSet() : n_(0) {}
    explicit PointSet(uint32_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static PointSet full(uint32_t universe) {
        PointSet s(universe);
        for (uint32_t i = 0; i < universe; ++i) s.add(i);
        return s;
    }
    static PointSet of(uint32_t universe, std::initializer_list<uint32_t> pts) {
        PointSet s(universe);
        for (uint32_t p : pts) s.add(p);
        return s;
    }
    static PointSet from_points(uint32_t universe, const std::vector<uint32_t>& pts) {
        PointSet s(universe);
        for (uint32_t p : pts) s.add(p);
        return s;
    }
    /// Low 64-bit mask constructor for small universes.
    static PointSet from_mask(uint32_t universe, uint64_t mask) {
        PointSet s(universe);
        if (universe > 0) s.w_[0] = universe >= 64 ? mask : (mask & ((uint64_t(1) << universe) - 1));
        return s;
    }

    uint32_t universe() const { return n_; }

    void add(uint32_t p) {
        check(p);
        w_[p >> 6] |= uint64_t(1) << (p & 63);
    }
    void remove(uint32_t p) {
        check(p);
        w_[p >> 6] &= ~(uint64_t(1) << (p & 63));
    }
    bool test(uint32_t p) const {
        if (p >= n_) return false;
        return (w_[p >> 6] >> (p & 63)) & 1;
    }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t x : w_) c += static_cast<uint32_t>(__builtin_popcountll(x));
        return c;
    }
    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    uint64_t mask64() const { return w_.empty() ? 0 : w_[0]; }

    std::vector<uint32_t> points() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for (uint32_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                out.push_back(wi * 64 + static_cast<uint32_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (uint32_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                f(wi * 64 + static_cast<uint32_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    PointSet& operator|=(const PointSet& o) {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    PointSet& operator^=(const PointSet& o) {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    /// Set difference.
    PointSet& operator-=(const PointSet& o) {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend PointSet operator|(PointSet a, const PointSet& b) { a |= b; return a; }
    friend PointSet operator&(PointSet a, const PointSet& b) { a &= b; return a; }
    friend PointSet operator^(PointSet a, const PointSet& b) { a ^= b; return a; }
    friend PointSet operator-(PointSet a, const PointSet& b) { a -= b; return a; }

    bool subset_of(const PointSet& o) const {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const PointSet& o) const {
        match(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (uint32_t p : points()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

private:
    void check(uint32_t p) const {
        if (p >= n_) throw Error("point " + std::to_string(p) + " outside universe of size " + std::to_string(n_));
    }
    void match(const PointSet& o) const {
        if (n_ != o.n_) throw GroundMismatch("point sets over different universes");
    }

    uint32_t n_;
    std::vector<uint64_t> w_;
};

/// Ascending-element-list (lexicographic) order on sets.
inline bool lex_less(const PointSet& a, const PointSet& b) {
    return a.points() < b.points();
}

/// Size first, then lexicographic: the tie-break order used for witnesses
/// and argmax sets throughout.
inline bool size_lex_less(const PointSet& a, const PointSet& b) {
    uint32_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

/// Advances `idx` to the next k-combination of {0..n-1} in lexicographic
/// order. Returns false when exhausted.
inline bool next_combination(std::vector<uint32_t>& idx, uint32_t n) {
    const uint32_t k = static_cast<uint32_t>(idx.size());
    if (k == 0) return false;
    uint32_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Enumerates subsets of `within` in size-then-lexicographic order, sizes
/// [min_size, max_size], calling f(set). Stop early by returning true from f.
template <typename F>
void for_each_subset_size_lex(const PointSet& within, uint32_t min_size, uint32_t max_size, F&& f) {
    const std::vector<uint32_t> pts = within.points();
    const uint32_t m = static_cast<uint32_t>(pts.size());
    if (max_size > m) max_size = m;
    for (uint32_t k = min_size; k <= max_size; ++k) {
        if (k == 0) {
            if (f(PointSet(within.universe()))) return;
            continue;
        }
        std::vector<uint32_t> idx(k);
        for (uint32_t i = 0; i < k; ++i) idx[i] = i;
        do {
            PointSet s(within.universe());
            for (uint32_t i : idx) s.add(pts[i]);
            if (f(s)) return;
        } while (next_combination(idx, m));
    }
}

} // namespace sml
