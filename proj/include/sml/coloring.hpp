#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sml/cover.hpp"
#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/matrix.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"

namespace sml {

/// Total symmetric 2-coloring of the pairs of a finite ground. Stored on
/// unordered pairs, so symmetry holds by construction.
class PairColoring {
public:
    explicit PairColoring(Ground ground)
        : ground_(std::move(ground)),
          bits_((static_cast<size_t>(ground_.size()) * (ground_.size() - 1) / 2 + 63) / 64, 0) {}

    static PairColoring from_pairs1(Ground ground, const std::vector<std::pair<uint32_t, uint32_t>>& pairs1) {
        PairColoring c(std::move(ground));
        for (auto [a, b] : pairs1) c.set_color(a, b, 1);
        return c;
    }

    const Ground& ground() const { return ground_; }

    int color(uint32_t a, uint32_t b) const {
        return (bits_[index(a, b) >> 6] >> (index(a, b) & 63)) & 1;
    }
    void set_color(uint32_t a, uint32_t b, int c) {
        const size_t i = index(a, b);
        if (c) bits_[i >> 6] |= uint64_t(1) << (i & 63);
        else bits_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    bool homogeneous(const PointSet& h, int want) const {
        const std::vector<uint32_t> pts = h.points();
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                if (color(pts[i], pts[j]) != want) return false;
        return true;
    }

    std::vector<std::pair<uint32_t, uint32_t>> pairs1() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (uint32_t a = 0; a + 1 < ground_.size(); ++a)
            for (uint32_t b = a + 1; b < ground_.size(); ++b)
                if (color(a, b)) out.emplace_back(a, b);
        return out;
    }

private:
    size_t index(uint32_t a, uint32_t b) const {
        if (a == b || a >= ground_.size() || b >= ground_.size())
            throw Error("pair coloring queried off the pairs");
        if (a > b) std::swap(a, b);
        // pairs (a,b) with a < b, ordered by b then a
        return static_cast<size_t>(b) * (b - 1) / 2 + a;
    }

    Ground ground_;
    std::vector<uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// homogeneous sets

struct HomogeneousOptions {
    uint32_t max_ground = 64;
    std::optional<PointSet> within; // restrict the search to this set
};

namespace detail {

/// Lexicographically least homogeneous extension of `chosen` to `size`
/// points from candidates >= next, all pairs colored `want`.
inline bool hom_extend(const PairColoring& c, int want, const std::vector<uint32_t>& pts,
                       size_t next, uint32_t size, std::vector<uint32_t>& chosen) {
    if (chosen.size() == size) return true;
    for (size_t i = next; i < pts.size(); ++i) {
        if (pts.size() - i < size - chosen.size()) return false;
        bool ok = true;
        for (uint32_t p : chosen)
            if (c.color(p, pts[i]) != want) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(pts[i]);
        if (hom_extend(c, want, pts, i + 1, size, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically least homogeneous set of the requested size and color.
/// want < 0 searches both colors and returns the lex-least of the two hits.
inline std::optional<PointSet> find_homogeneous(const PairColoring& c, int want, uint32_t size,
                                                const HomogeneousOptions& opts = {}) {
    const uint32_t n = c.ground().size();
    if (n > opts.max_ground) throw SizeGuard("find_homogeneous ground above " + std::to_string(opts.max_ground));
    PointSet domain = opts.within ? *opts.within : PointSet::full(n);
    if (domain.universe() != n) throw GroundMismatch("find_homogeneous: domain universe mismatch");
    const std::vector<uint32_t> pts = domain.points();
    if (size > pts.size()) return std::nullopt;
    if (size == 0) return PointSet(n);

    auto search = [&](int w) -> std::optional<PointSet> {
        std::vector<uint32_t> chosen;
        chosen.reserve(size);
        if (detail::hom_extend(c, w, pts, 0, size, chosen))
            return PointSet::from_points(n, chosen);
        return std::nullopt;
    };
    if (want == 0 || want == 1) return search(want);
    auto h0 = search(0), h1 = search(1);
    if (!h0) return h1;
    if (!h1) return h0;
    return lex_less(*h0, *h1) ? h0 : h1;
}

/// Largest homogeneous set of the given color, up to `cap` points.
inline std::optional<PointSet> largest_homogeneous(const PairColoring& c, int want, uint32_t cap,
                                                   const HomogeneousOptions& opts = {}) {
    std::optional<PointSet> best;
    for (uint32_t s = 1; s <= cap; ++s) {
        auto h = find_homogeneous(c, want, s, opts);
        if (!h) break;
        best = h;
    }
    return best;
}

namespace detail {

/// All maximal homogeneous subsets of one color: Bron-Kerbosch with
/// pivoting on the color graph.
inline void maximal_hom_sets(const PairColoring& c, int want,
                             std::vector<uint32_t>& r, std::vector<uint32_t> p,
                             std::vector<uint32_t> x, std::vector<PointSet>& out, uint32_t universe) {
    if (p.empty() && x.empty()) {
        out.push_back(PointSet::from_points(universe, r));
        return;
    }
    // pivot on the vertex with most neighbours in p
    std::vector<uint32_t> cand = p;
    uint32_t pivot = !p.empty() ? p[0] : x[0];
    size_t best_deg = 0;
    for (uint32_t u : p) {
        size_t deg = 0;
        for (uint32_t v : p)
            if (u != v && c.color(u, v) == want) ++deg;
        if (deg >= best_deg) {
            best_deg = deg;
            pivot = u;
        }
    }
    std::vector<uint32_t> branch;
    for (uint32_t v : cand)
        if (v == pivot || c.color(pivot, v) != want) branch.push_back(v);
    for (uint32_t v : branch) {
        std::vector<uint32_t> np, nx;
        for (uint32_t u : p)
            if (u != v && c.color(u, v) == want) np.push_back(u);
        for (uint32_t u : x)
            if (c.color(u, v) == want) nx.push_back(u);
        r.push_back(v);
        maximal_hom_sets(c, want, r, std::move(np), std::move(nx), out, universe);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace detail

/// Least number of homogeneous sets covering A exactly (no finite slack at
/// finite scale). Memoizes the maximal homogeneous subsets of A and runs an
/// exact set cover over them.
inline uint32_t hom_cover_number(const PairColoring& c, const PointSet& a, uint32_t max_points = 20) {
    if (a.universe() != c.ground().size()) throw GroundMismatch("hom_cover_number: set universe mismatch");
    if (a.count() > max_points) throw SizeGuard("hom_cover_number above " + std::to_string(max_points) + " points");
    if (a.empty()) return 0;
    const std::vector<uint32_t> pts = a.points();
    std::vector<PointSet> family;
    for (int want : {0, 1}) {
        std::vector<uint32_t> r;
        detail::maximal_hom_sets(c, want, r, pts, {}, family, a.universe());
    }
    CoverResult res = min_cover(family, a);
    if (!res.coverable) throw Error("hom_cover_number: singletons are homogeneous, cover must exist");
    return res.count;
}

// ---------------------------------------------------------------------------
// dyadic level partitions of a measure matrix

/// Per point n and measure row k: the level i with 2^-i-1 < mu_k({n}) <= 2^-i,
/// or infinity (encoded -1) when the entry is zero. Requires entries <= 1.
class PartitionSystem {
public:
    static constexpr int32_t kInf = -1;

    static PartitionSystem from_matrix(const VectorSequence& mat) {
        PartitionSystem ps;
        ps.mat_ = mat;
        ps.levels_.assign(mat.rows(), std::vector<int32_t>(mat.cols(), kInf));
        for (uint32_t k = 0; k < mat.rows(); ++k)
            for (uint32_t n = 0; n < mat.cols(); ++n) {
                const Rat& v = mat.at(k, n);
                if (v.sgn() < 0) throw SignedInput("level partition needs nonnegative entries");
                if (v > Rat(1)) throw EntryAboveOne("entry " + v.str() + " above 1");
                if (v.is_zero()) continue;
                int32_t i = 0;
                while (v <= pow2(-static_cast<long>(i) - 1)) ++i;
                ps.levels_[k][n] = i;
            }
        return ps;
    }

    const VectorSequence& matrix() const { return mat_; }
    uint32_t points() const { return mat_.cols(); }
    uint32_t measures() const { return mat_.rows(); }

    int32_t level(uint32_t k, uint32_t n) const { return levels_[k][n]; }

    /// L_n: the finite levels occurring at point n, ascending.
    std::vector<int32_t> finite_levels(uint32_t n) const {
        std::vector<int32_t> out;
        for (uint32_t k = 0; k < measures(); ++k)
            if (levels_[k][n] != kInf) out.push_back(levels_[k][n]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    VectorSequence mat_;
    std::vector<std::vector<int32_t>> levels_;
};

/// level_partition(mat): the partition system of a matrix with entries <= 1.
inline PartitionSystem level_partition(const VectorSequence& mat) {
    return PartitionSystem::from_matrix(mat);
}

/// For points n < m: color 1 iff every measure with a finite level at n
/// either vanishes at m or sits at a strictly higher level there.
inline PairColoring c0tall_coloring(const PartitionSystem& ps) {
    PairColoring c{Ground(ps.points())};
    for (uint32_t n = 0; n + 1 < ps.points(); ++n)
        for (uint32_t m = n + 1; m < ps.points(); ++m) {
            bool one = true;
            for (uint32_t k = 0; k < ps.measures() && one; ++k) {
                const int32_t ln = ps.level(k, n);
                if (ln == PartitionSystem::kInf) continue;
                const int32_t lm = ps.level(k, m);
                if (lm != PartitionSystem::kInf && lm <= ln) one = false;
            }
            if (one) c.set_color(n, m, 1);
        }
    return c;
}

struct Color1BoundCertificate {
    Rat max_mass;          // max over rows of the row mass on H
    uint32_t argmax_row = 0;
    bool within = false;   // max_mass <= 2
};

/// Certifies the mass bound for 1-homogeneous sets: along such a set the
/// per-row levels strictly increase, so every row mass on H stays below the
/// geometric series bound 2.
inline Color1BoundCertificate verify_color1_bound(const PartitionSystem& ps, const PointSet& h) {
    if (h.universe() != ps.points()) throw GroundMismatch("verify_color1_bound: set universe mismatch");
    PairColoring c = c0tall_coloring(ps);
    if (!c.homogeneous(h, 1)) throw NotHomogeneous("the set is not 1-homogeneous");
    Color1BoundCertificate cert;
    for (uint32_t k = 0; k < ps.measures(); ++k) {
        Rat mass(0);
        h.for_each([&](uint32_t n) { mass += ps.matrix().at(k, n); });
        if (mass > cert.max_mass) {
            cert.max_mass = mass;
            cert.argmax_row = k;
        }
    }
    cert.within = cert.max_mass <= Rat(2);
    return cert;
}

/// Rounds entry (k, n) down to the dyadic grid i/2^n of its column:
/// the largest multiple of 2^-n strictly below the value (zero entries and
/// entries at most 2^-n round to zero). Entrywise below the input, with a
/// per-column error of at most 2^-n and finitely many occupied levels.
inline VectorSequence dyadic_round(const VectorSequence& mat) {
    VectorSequence out(mat.rows(), mat.cols(), false);
    for (uint32_t k = 0; k < mat.rows(); ++k)
        for (uint32_t n = 0; n < mat.cols(); ++n) {
            const Rat& v = mat.at(k, n);
            if (v.sgn() < 0) throw SignedInput("dyadic_round needs nonnegative entries");
            if (v > Rat(1)) throw EntryAboveOne("entry " + v.str() + " above 1");
            if (v.is_zero()) continue;
            // i/2^n < v <= (i+1)/2^n, i.e. i = ceil(v * 2^n) - 1
            const Rat scaled = v * pow2(static_cast<long>(n));
            mpz_class i;
            mpz_cdiv_q(i.get_mpz_t(), scaled.raw().get_num_mpz_t(), scaled.raw().get_den_mpz_t());
            i -= 1;
            out.at(k, n) = Rat(mpq_class(i, 1)) * pow2(-static_cast<long>(n));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Schreier-barrier coloring

/// Coloring of the Schreier barrier sets {s : |s| = min(s) + 1}: a set
/// {q, n_1, ..., n_q} gets color 1 iff some measure row is at least
/// 2^-p-1 on every n_j.
class BarrierColoring {
public:
    BarrierColoring(VectorSequence mat, uint32_t p) : mat_(std::move(mat)), p_(p) {}

    const VectorSequence& matrix() const { return mat_; }
    uint32_t p() const { return p_; }

    static bool is_barrier(const PointSet& s) {
        if (s.empty()) return false;
        const std::vector<uint32_t> pts = s.points();
        return pts.size() == static_cast<size_t>(pts[0]) + 1;
    }

    int color(const PointSet& s) const {
        if (!is_barrier(s)) throw NotBarrierSet("set " + s.str() + " is not on the Schreier barrier");
        const std::vector<uint32_t> pts = s.points();
        const Rat threshold = pow2(-static_cast<long>(p_) - 1);
        for (uint32_t k = 0; k < mat_.rows(); ++k) {
            bool all = true;
            for (size_t j = 1; j < pts.size() && all; ++j)
                if (mat_.at(k, pts[j]) < threshold) all = false;
            if (all) return 1;
        }
        return 0;
    }

    /// A set is 0-homogeneous when every barrier subset has color 0.
    bool homogeneous0(const PointSet& h) const {
        bool ok = true;
        for_each_subset_size_lex(h, 1, h.count(), [&](const PointSet& s) {
            if (!is_barrier(s)) return false;
            if (color(s) != 0) {
                ok = false;
                return true;
            }
            return false;
        });
        return ok;
    }

private:
    VectorSequence mat_;
    uint32_t p_;
};

inline BarrierColoring schreier_coloring(const VectorSequence& mat, uint32_t p) {
    if (mat.has_negative()) throw SignedInput("schreier_coloring needs nonnegative entries");
    if (mat.max_abs() > Rat(1)) throw EntryAboveOne("schreier_coloring needs entries <= 1");
    return BarrierColoring(mat, p);
}

// ---------------------------------------------------------------------------
// eventually disjoint subsequences

/// One row of cells indexed by level; cells within a row are pairwise
/// disjoint subsets of a common universe.
struct PartitionRow {
    std::vector<std::pair<int32_t, PointSet>> cells; // (level, cell), levels distinct

    std::vector<int32_t> levels() const {
        std::vector<int32_t> out;
        for (const auto& [l, c] : cells)
            if (!c.empty()) out.push_back(l);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct EventuallyDisjointResult {
    bool ok = false;
    std::vector<uint32_t> indices; // chosen rows, ascending
    int32_t p = 0;                 // cells at levels > p are pairwise disjoint across rows
    std::string note;
};

/// Checks the defining property for a chosen subsequence and threshold.
inline bool eventually_disjoint_holds(const std::vector<PartitionRow>& rows,
                                      const std::vector<uint32_t>& indices, int32_t p) {
    for (size_t a = 0; a < indices.size(); ++a)
        for (size_t b = a + 1; b < indices.size(); ++b)
            for (const auto& [la, ca] : rows[indices[a]].cells)
                for (const auto& [lb, cb] : rows[indices[b]].cells)
                    if (la == lb && la > p && ca.intersects(cb)) return false;
    return true;
}

namespace detail {

inline EventuallyDisjointResult even_dis_solve(const std::vector<PartitionRow>& rows,
                                               std::vector<uint32_t> idx, uint32_t l, uint32_t target) {
    EventuallyDisjointResult res;
    if (idx.size() < target) {
        res.note = "fewer rows than the target; the infinite statement is not refuted";
        return res;
    }
    // rows with no cells join any subsequence
    bool all_empty = true;
    for (uint32_t i : idx)
        if (!rows[i].levels().empty()) all_empty = false;
    if (all_empty || l == 0) {
        res.ok = true;
        res.indices = std::move(idx);
        res.p = 0;
        return res;
    }

    std::vector<int32_t> min_level(idx.size());
    for (size_t j = 0; j < idx.size(); ++j) {
        auto lv = rows[idx[j]].levels();
        min_level[j] = lv.empty() ? INT32_MIN : lv.front();
    }

    // constant case first: the smallest min-level value held by >= target rows
    std::vector<int32_t> values;
    for (int32_t v : min_level)
        if (v != INT32_MIN) values.push_back(v);
    std::sort(values.begin(), values.end());
    for (size_t s = 0; s < values.size();) {
        size_t e = s;
        while (e < values.size() && values[e] == values[s]) ++e;
        // empty-cell rows are compatible with any choice, count them in
        size_t empties = min_level.size() - values.size();
        if (e - s + empties >= target) {
            const int32_t v = values[s];
            std::vector<uint32_t> sub;
            for (size_t j = 0; j < idx.size(); ++j)
                if (min_level[j] == v || min_level[j] == INT32_MIN) sub.push_back(idx[j]);
            // strip the min cell of each chosen row and recurse with l - 1
            std::vector<PartitionRow> next_rows = rows;
            for (uint32_t i : sub) {
                auto& cells = next_rows[i].cells;
                for (auto it = cells.begin(); it != cells.end(); ++it)
                    if (it->first == v) {
                        cells.erase(it);
                        break;
                    }
            }
            EventuallyDisjointResult inner = even_dis_solve(next_rows, sub, l - 1, target);
            if (inner.ok) {
                inner.p = std::max(inner.p, v);
                return inner;
            }
        }
        s = e;
    }

    // separated case: greedily chain rows whose level ranges are disjoint
    std::vector<uint32_t> picks;
    int32_t frontier = INT32_MIN;
    for (size_t j = 0; j < idx.size(); ++j) {
        auto lv = rows[idx[j]].levels();
        if (lv.empty()) {
            picks.push_back(idx[j]);
            continue;
        }
        if (lv.front() > frontier) {
            picks.push_back(idx[j]);
            frontier = lv.back();
        }
    }
    if (picks.size() >= target) {
        res.ok = true;
        res.indices = std::move(picks);
        res.p = 0;
        return res;
    }
    res.note = "finite input too short to reach the target; the infinite statement is not refuted";
    return res;
}

} // namespace detail

/// Follows the induction on the cell bound l: prefer a constant-min-level
/// subsequence when some value occurs often enough, else the
/// strictly-separated one. The returned certificate (indices, p) always
/// passes eventually_disjoint_holds.
inline EventuallyDisjointResult eventually_disjoint_subsequence(const std::vector<PartitionRow>& rows,
                                                                uint32_t l, uint32_t target) {
    for (const PartitionRow& r : rows) {
        size_t nonempty = 0;
        std::vector<int32_t> seen;
        for (const auto& [lv, cell] : r.cells) {
            if (!cell.empty()) ++nonempty;
            seen.push_back(lv);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw HypothesisFailure("a row lists one level twice");
        if (nonempty > l)
            throw HypothesisFailure("a row has more than l nonempty cells");
    }
    std::vector<uint32_t> idx(rows.size());
    for (uint32_t i = 0; i < rows.size(); ++i) idx[i] = i;
    EventuallyDisjointResult res = detail::even_dis_solve(rows, std::move(idx), l, target);
    if (res.ok && !eventually_disjoint_holds(rows, res.indices, res.p))
        throw Error("eventually_disjoint_subsequence produced a bad certificate");
    return res;
}

// ---------------------------------------------------------------------------
// named colorings

/// Rationals of [0,1] in breadth-first Stern-Brocot order:
/// 0, 1, 1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...
inline std::vector<Rat> stern_brocot_rationals(uint32_t n) {
    std::vector<Rat> out;
    out.reserve(n);
    if (n >= 1) out.emplace_back(0);
    if (n >= 2) out.emplace_back(1);
    struct Node {
        long pn, pd, qn, qd;
    };
    std::vector<Node> frontier{{0, 1, 1, 1}};
    while (out.size() < n) {
        std::vector<Node> next;
        next.reserve(frontier.size() * 2);
        for (const Node& nd : frontier) {
            const long mn = nd.pn + nd.qn, md = nd.pd + nd.qd;
            out.emplace_back(mn, md);
            if (out.size() == n) return out;
            next.push_back({nd.pn, nd.pd, mn, md});
            next.push_back({mn, md, nd.qn, nd.qd});
        }
        frontier = std::move(next);
    }
    return out;
}

/// Sierpinski coloring on the first n rationals of the fixed enumeration:
/// color 0 iff index order and value order agree.
inline PairColoring sierpinski_coloring(uint32_t n) {
    if (n > 10000) throw SizeGuard("sierpinski coloring above 10^4 points");
    const std::vector<Rat> r = stern_brocot_rationals(n);
    std::vector<std::string> labels(n);
    for (uint32_t i = 0; i < n; ++i) labels[i] = r[i].str();
    PairColoring c{Ground(n, std::move(labels))};
    for (uint32_t i = 0; i + 1 < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (!(r[i] < r[j])) c.set_color(i, j, 1);
    return c;
}

/// Partition coloring: color 0 iff both points lie in the same piece.
inline PairColoring partition_coloring(const std::vector<uint32_t>& sizes) {
    uint32_t n = 0;
    for (uint32_t s : sizes) {
        if (s == 0) throw ParseError("partition coloring: empty piece");
        n += s;
    }
    if (n == 0) throw ParseError("partition coloring: no points");
    PairColoring c{Ground(n)};
    std::vector<uint32_t> piece(n);
    uint32_t base = 0, pi = 0;
    for (uint32_t s : sizes) {
        for (uint32_t i = 0; i < s; ++i) piece[base + i] = pi;
        base += s;
        ++pi;
    }
    for (uint32_t a = 0; a + 1 < n; ++a)
        for (uint32_t b = a + 1; b < n; ++b)
            if (piece[a] != piece[b]) c.set_color(a, b, 1);
    return c;
}

// ---------------------------------------------------------------------------
// favors-color diagnostics

struct FavorsRow {
    std::vector<uint32_t> removed;  // indices into the generating family
    uint32_t complement_size = 0;
    uint32_t found_size = 0;        // largest (1-i)-homogeneous size found, up to the cap
    PointSet witness;
};

struct FavorsReport {
    int color = 0;                    // the candidate favored color i
    uint32_t largest_other = 0;       // largest (1-i)-homogeneous set on the whole ground
    PointSet largest_other_witness;
    std::vector<FavorsRow> rows;      // one per complement of <= hom_bound family sets
    std::string note;                 // truncation disclaimer
};

/// Diagnostics for the favored-color hypothesis: (a) the largest
/// (1-i)-homogeneous set on the ground, (b) inside each complement of at
/// most hom_bound generating sets, the largest (1-i)-homogeneous set up to
/// `sizes` points. Finite evidence only; no infinite claim is made.
inline FavorsReport favors_color_check(const PairColoring& c, int color,
                                       const std::vector<PointSet>& gen_family,
                                       uint32_t hom_bound, uint32_t sizes,
                                       const HomogeneousOptions& opts = {}) {
    const uint32_t n = c.ground().size();
    if (n > opts.max_ground) throw SizeGuard("favors_color_check ground above " + std::to_string(opts.max_ground));
    for (const PointSet& h : gen_family) {
        if (h.universe() != n) throw GroundMismatch("favors_color_check: family universe mismatch");
        if (!c.homogeneous(h, color))
            throw HypothesisFailure("generating family member " + h.str() + " is not " +
                                    std::to_string(color) + "-homogeneous");
    }

    FavorsReport rep;
    rep.color = color;
    rep.largest_other_witness = PointSet(n);
    const int other = 1 - color;
    if (auto h = largest_homogeneous(c, other, n, opts)) {
        rep.largest_other = h->count();
        rep.largest_other_witness = *h;
    }

    const uint32_t fam = static_cast<uint32_t>(gen_family.size());
    const uint32_t bound = std::min(hom_bound, fam);
    for (uint32_t k = 0; k <= bound; ++k) {
        std::vector<uint32_t> idx(k);
        for (uint32_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            PointSet comp = PointSet::full(n);
            for (uint32_t i : idx) comp -= gen_family[i];
            FavorsRow row{idx, comp.count(), 0, PointSet(n)};
            HomogeneousOptions sub = opts;
            sub.within = comp;
            if (auto h = largest_homogeneous(c, other, std::min(sizes, comp.count()), sub)) {
                row.found_size = h->count();
                row.witness = *h;
            }
            rep.rows.push_back(std::move(row));
            if (k == 0 || !next_combination(idx, fam)) break;
        }
    }
    rep.note = "truncation diagnostic: finite-scale evidence for the favored-color "
               "hypothesis; the infinite statement is neither asserted nor refuted";
    return rep;
}

} // namespace sml
