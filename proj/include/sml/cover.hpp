#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "sml/errors.hpp"
#include "sml/pointset.hpp"

namespace sml {

struct CoverResult {
    bool coverable = false;
    uint32_t count = 0;            // minimal number of family sets, valid if coverable
    std::vector<uint32_t> picks;   // family indices; filled only on request
};

namespace detail {

/// Depth-first branch and bound for large families. Branches on an
/// uncovered point with the fewest candidate sets, candidates in ascending
/// family index order; seeded with a greedy upper bound by the caller.
inline void cover_dfs(const std::vector<PointSet>& family,
                      const std::vector<std::vector<uint32_t>>& candidates,
                      const PointSet& remaining, uint32_t depth, uint32_t& best) {
    if (remaining.empty()) {
        best = std::min(best, depth);
        return;
    }
    if (depth + 1 >= best) return;
    uint32_t branch = 0;
    size_t branch_deg = SIZE_MAX;
    remaining.for_each([&](uint32_t p) {
        if (candidates[p].size() < branch_deg) {
            branch_deg = candidates[p].size();
            branch = p;
        }
    });
    for (uint32_t fi : candidates[branch]) {
        cover_dfs(family, candidates, remaining - family[fi], depth + 1, best);
        if (depth + 1 >= best) return;
    }
}

/// Exact cover count. Families of at most 20 sets go through the
/// hitting-set form: J covers A iff J meets every candidate mask
/// cand(p) = { i : p in family[i] }, solved by a subset-sum sweep over the
/// 2^|F| index sets. Larger families fall back to branch and bound.
inline std::optional<uint32_t> cover_count(const std::vector<PointSet>& family,
                                           const PointSet& target) {
    if (target.empty()) return 0;
    const uint32_t nf = static_cast<uint32_t>(family.size());
    for (const PointSet& f : family)
        if (f.universe() != target.universe()) throw GroundMismatch("cover: family universe mismatch");

    if (nf <= 20) {
        std::vector<uint32_t> cand_of_point(target.universe(), 0);
        for (uint32_t fi = 0; fi < nf; ++fi)
            family[fi].for_each([&](uint32_t p) { cand_of_point[p] |= uint32_t(1) << fi; });
        const uint32_t total_bits = uint32_t(1) << nf;
        const uint32_t words = (total_bits + 63) / 64;
        std::vector<uint64_t> has(words, 0); // bit T: some candidate mask is a subset of T
        bool gap = false;
        target.for_each([&](uint32_t p) {
            const uint32_t c = cand_of_point[p];
            if (c == 0) gap = true;
            else has[c >> 6] |= uint64_t(1) << (c & 63);
        });
        if (gap) return std::nullopt;
        // subset-sum sweep, bit-parallel inside words and block-wise across them
        static constexpr uint64_t kNoBit[6] = {
            0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
            0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
        for (uint32_t b = 0; b < nf && b < 6; ++b)
            for (uint32_t i = 0; i < words; ++i)
                has[i] |= (has[i] & kNoBit[b]) << (uint32_t(1) << b);
        for (uint32_t b = 6; b < nf; ++b) {
            const uint32_t stride = uint32_t(1) << (b - 6);
            for (uint32_t i = 0; i < words; ++i)
                if (i & stride) has[i] |= has[i ^ stride];
        }
        // J covers iff no candidate mask lives inside the complement of J:
        // minimize nf - |T| over bits T still clear
        uint32_t best = nf;
        for (uint32_t i = 0; i < words; ++i) {
            uint64_t z = ~has[i];
            if (total_bits < 64) z &= (uint64_t(1) << total_bits) - 1;
            while (z) {
                const uint32_t t = i * 64 + static_cast<uint32_t>(__builtin_ctzll(z));
                z &= z - 1;
                const uint32_t j = nf - static_cast<uint32_t>(__builtin_popcount(t));
                if (j < best) best = j;
            }
        }
        return best;
    }

    std::vector<std::vector<uint32_t>> candidates(target.universe());
    bool gap = false;
    target.for_each([&](uint32_t p) {
        for (uint32_t fi = 0; fi < nf; ++fi)
            if (family[fi].test(p)) candidates[p].push_back(fi);
        if (candidates[p].empty()) gap = true;
    });
    if (gap) return std::nullopt;

    uint32_t ub = 0;
    {
        PointSet rem = target;
        while (!rem.empty()) {
            uint32_t best_fi = 0, best_gain = 0;
            for (uint32_t fi = 0; fi < nf; ++fi) {
                uint32_t gain = (family[fi] & rem).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_fi = fi;
                }
            }
            rem -= family[best_fi];
            ++ub;
        }
    }
    uint32_t best = ub;
    cover_dfs(family, candidates, target, 0, best);
    return best;
}

} // namespace detail

/// Exact minimum set cover of `target` by sets of `family`. When
/// `want_picks` is set, the pick list is the lexicographically least optimal
/// index set, reconstructed by feasibility queries in ascending index order.
inline CoverResult min_cover(const std::vector<PointSet>& family, const PointSet& target,
                             bool want_picks = false) {
    CoverResult res;
    auto count = detail::cover_count(family, target);
    if (!count) return res;
    res.coverable = true;
    res.count = *count;

    if (want_picks && res.count > 0) {
        PointSet rem = target;
        uint32_t budget = res.count;
        for (uint32_t fi = 0; fi < family.size() && !rem.empty(); ++fi) {
            if (!family[fi].intersects(rem)) continue;
            PointSet after = rem - family[fi];
            auto sub = detail::cover_count(family, after);
            if (sub && *sub <= budget - 1) {
                res.picks.push_back(fi);
                rem = after;
                --budget;
            }
        }
    }
    return res;
}

/// All 2^universe cover numbers at once (-1 encodes "not coverable").
/// Universe is capped at 20 bits.
inline std::vector<int32_t> cover_table(const std::vector<PointSet>& family, uint32_t universe) {
    if (universe > 20) throw SizeGuard("cover_table universe above 20 points");
    std::vector<uint64_t> fmask(family.size());
    for (size_t i = 0; i < family.size(); ++i) {
        if (family[i].universe() != universe) throw GroundMismatch("cover_table: family universe mismatch");
        fmask[i] = family[i].mask64();
    }
    const uint64_t full = universe >= 64 ? ~uint64_t(0) : ((uint64_t(1) << universe) - 1);
    const int32_t unreachable = INT32_MAX;
    std::vector<int32_t> dp(size_t(1) << universe, unreachable);
    dp[0] = 0;
    for (uint64_t m = 1; m <= full; ++m) {
        int32_t best = unreachable;
        for (uint64_t f : fmask) {
            if (!(f & m)) continue;
            int32_t sub = dp[m & ~f];
            if (sub != unreachable && sub + 1 < best) best = sub + 1;
        }
        dp[m] = best;
    }
    for (int32_t& v : dp)
        if (v == unreachable) v = -1;
    return dp;
}

} // namespace sml
