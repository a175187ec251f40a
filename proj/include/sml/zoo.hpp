#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/matrix.hpp"
#include "sml/measure.hpp"
#include "sml/pathology.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/submeasure.hpp"

namespace sml {

/// The minimal pathological integer-valued submeasure: on {0,1,2}, value 1
/// on nonempty sets of size at most 2 and value 2 on the whole set.
inline Submeasure gen_minimal_pathological() {
    Ground g(3);
    std::vector<std::pair<PointSet, RatX>> entries;
    for (uint64_t m = 0; m < 8; ++m) {
        uint32_t c = static_cast<uint32_t>(__builtin_popcountll(m));
        entries.emplace_back(PointSet::from_mask(3, m), c == 0 ? RatX(0) : c <= 2 ? RatX(1) : RatX(2));
    }
    return Submeasure::table(g, std::move(entries));
}

// ---------------------------------------------------------------------------
// the ideal generated by pieces and selectors of a block partition

struct EdPair {
    Ground ground;
    std::vector<PointSet> blocks;
    Submeasure chain; // Mazur chain over pieces + selectors, arity a(n) = n
    Submeasure sup;   // sup of counting measures on (n+1)-subsets of block n
};

inline EdPair gen_ed(const std::vector<uint32_t>& block_sizes) {
    if (block_sizes.size() < 2) throw ParseError("gen_ed needs at least 2 blocks");
    uint32_t n = 0;
    for (uint32_t s : block_sizes) {
        if (s == 0) throw ParseError("gen_ed: empty block");
        n += s;
    }
    if (n > 24) throw SizeGuard("gen_ed ground above 24 points");
    Ground g(n);

    std::vector<PointSet> blocks;
    uint32_t base = 0;
    for (uint32_t s : block_sizes) {
        PointSet b(n);
        for (uint32_t i = 0; i < s; ++i) b.add(base + i);
        blocks.push_back(std::move(b));
        base += s;
    }

    // level-1 generators: the pieces and every full selector
    std::vector<PointSet> level1 = blocks;
    uint64_t selectors = 1;
    for (uint32_t s : block_sizes) selectors *= s;
    if (selectors > 4096) throw SizeGuard("gen_ed: too many selectors");
    std::vector<uint32_t> choice(block_sizes.size(), 0);
    for (uint64_t it = 0; it < selectors; ++it) {
        PointSet sel(n);
        for (size_t b = 0; b < block_sizes.size(); ++b)
            sel.add(blocks[b].points()[choice[b]]);
        level1.push_back(std::move(sel));
        for (size_t b = block_sizes.size(); b-- > 0;) {
            if (++choice[b] < block_sizes[b]) break;
            choice[b] = 0;
        }
    }
    Submeasure chain = mazur_from_chain(g, std::move(level1), AritySchedule::level());

    std::vector<Measure> measures;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        const uint32_t want = static_cast<uint32_t>(b) + 1;
        if (block_sizes[b] < want)
            throw BlockTooSmall("gen_ed: block " + std::to_string(b) + " smaller than " + std::to_string(want));
        const std::vector<uint32_t> pts = blocks[b].points();
        std::vector<uint32_t> idx(want);
        for (uint32_t i = 0; i < want; ++i) idx[i] = i;
        do {
            PointSet f(n);
            for (uint32_t i : idx) f.add(pts[i]);
            measures.push_back(Measure::counting(g, f));
        } while (next_combination(idx, static_cast<uint32_t>(pts.size())));
    }
    Submeasure sup = Submeasure::sup(std::move(measures));
    return EdPair{g, std::move(blocks), std::move(chain), std::move(sup)};
}

// ---------------------------------------------------------------------------
// the finite restriction: blocks C_k of size k+1 with selector-chain covers

struct EdFinInstance {
    Ground ground;                // K_n = C_0 u ... u C_n, |C_k| = k+1
    std::vector<PointSet> blocks; // C_k
    Submeasure psi;               // sup of per-block counting measures
    CoveringInstance chains;      // the (n+1)! selector chains
};

inline EdFinInstance gen_edfin(uint32_t n) {
    if (n < 1) throw ParseError("gen_edfin needs n >= 1");
    if (n > 6) throw SizeGuard("gen_edfin level above 6 (7! chains)");
    uint32_t size = 0;
    for (uint32_t k = 0; k <= n; ++k) size += k + 1;
    Ground g(size);

    std::vector<PointSet> blocks;
    uint32_t base = 0;
    for (uint32_t k = 0; k <= n; ++k) {
        PointSet b(size);
        for (uint32_t i = 0; i <= k; ++i) b.add(base + i);
        blocks.push_back(std::move(b));
        base += k + 1;
    }

    std::vector<Measure> measures;
    for (const PointSet& c : blocks) measures.push_back(Measure::counting(g, c));
    Submeasure psi = Submeasure::sup(std::move(measures));

    // S_0 = {C_0}; S_{k+1} = { s u {j} : s in S_k, j in C_{k+1} }
    std::vector<PointSet> chains{blocks[0]};
    for (uint32_t k = 1; k <= n; ++k) {
        std::vector<PointSet> next;
        next.reserve(chains.size() * (k + 1));
        for (const PointSet& s : chains)
            for (uint32_t j : blocks[k].points()) {
                PointSet t = s;
                t.add(j);
                next.push_back(std::move(t));
            }
        chains = std::move(next);
    }
    return EdFinInstance{g, std::move(blocks), std::move(psi), CoveringInstance{g, std::move(chains)}};
}

// ---------------------------------------------------------------------------
// the function-space example: K_n = all functions n -> 2n, hats avoid a value

struct MazurExample {
    uint32_t n = 0, m = 0;   // domain size, codomain size m = 2n
    Ground ground;           // |K_n| = m^n, labeled by digit strings
    std::vector<PointSet> hats; // hat_i = { f : i not in range(f) }
    Submeasure psi;          // min-cover over the hats
    CoveringInstance cover;
};

inline MazurExample gen_mazur(uint32_t n) {
    if (n < 1 || n > 4) throw SizeGuard("gen_mazur supports n = 1..4");
    const uint32_t m = 2 * n;
    uint32_t size = 1;
    for (uint32_t i = 0; i < n; ++i) size *= m;
    Ground g(size, [&] {
        std::vector<std::string> labels(size);
        for (uint32_t f = 0; f < size; ++f) {
            std::string s(n, '0');
            uint32_t v = f;
            for (uint32_t i = n; i-- > 0;) {
                s[i] = static_cast<char>('0' + v % m);
                v /= m;
            }
            labels[f] = s;
        }
        return labels;
    }());

    std::vector<PointSet> hats(m, PointSet(size));
    for (uint32_t f = 0; f < size; ++f) {
        uint32_t range_mask = 0;
        uint32_t v = f;
        for (uint32_t i = 0; i < n; ++i) {
            range_mask |= uint32_t(1) << (v % m);
            v /= m;
        }
        for (uint32_t i = 0; i < m; ++i)
            if (!(range_mask & (uint32_t(1) << i))) hats[i].add(f);
    }
    Submeasure psi = Submeasure::min_cover_repr(g, hats);
    return MazurExample{n, m, g, hats, std::move(psi), CoveringInstance{g, hats}};
}

// ---------------------------------------------------------------------------
// clopen-half example: Omega_n = unions of half of the level-n cylinders

struct SoleckiExample {
    uint32_t n = 0;
    Ground ground;                  // C(2^n, 2^(n-1)) points
    std::vector<uint32_t> masks;    // cylinder-inclusion mask per point, ascending
    std::vector<PointSet> hats;     // s~ = { b : cylinder s included in b }
    Submeasure chi;                 // min-cover over the hats
    CoveringInstance cover;
};

/// Cylinder j (j = 0..2^n-1) is the length-n binary string of j, most
/// significant bit first.
inline std::string cylinder_label(uint32_t n, uint32_t j) {
    std::string s(n, '0');
    for (uint32_t i = 0; i < n; ++i)
        if (j & (uint32_t(1) << (n - 1 - i))) s[i] = '1';
    return s;
}

inline SoleckiExample gen_solecki(uint32_t n) {
    if (n < 2 || n > 4) throw SizeGuard("gen_solecki supports n = 2..4");
    const uint32_t strings = uint32_t(1) << n;
    const uint32_t half = strings / 2;

    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (uint32_t(1) << strings); ++m)
        if (static_cast<uint32_t>(__builtin_popcount(m)) == half) masks.push_back(m);

    const uint32_t size = static_cast<uint32_t>(masks.size());
    std::vector<std::string> labels(size);
    for (uint32_t p = 0; p < size; ++p) {
        std::string l;
        for (uint32_t j = 0; j < strings; ++j) {
            if (!(masks[p] & (uint32_t(1) << j))) continue;
            if (!l.empty()) l += "|";
            l += cylinder_label(n, j);
        }
        labels[p] = l;
    }
    Ground g(size, std::move(labels));

    std::vector<PointSet> hats(strings, PointSet(size));
    for (uint32_t p = 0; p < size; ++p)
        for (uint32_t j = 0; j < strings; ++j)
            if (masks[p] & (uint32_t(1) << j)) hats[j].add(p);

    Submeasure chi = Submeasure::min_cover_repr(g, hats);
    return SoleckiExample{n, g, std::move(masks), hats, std::move(chi), CoveringInstance{g, hats}};
}

// ---------------------------------------------------------------------------
// staged block families with per-cell normalized measures

enum class PropertyAVariant { EqualCells, GrowingCells }; // |B_n^{k+1}| = |B_n^k| vs +(n+1)

struct StagedFamily {
    PropertyAVariant variant;
    Ground ground;
    std::vector<PointSet> stages;               // B_n (union over k)
    std::vector<std::vector<PointSet>> cells;   // B_n^k
    std::vector<std::vector<Measure>> cell_measures; // nu_n^k with mass n+1 spread evenly
    Submeasure phi;                             // sup over all full cell choices
};

inline StagedFamily gen_property_a(PropertyAVariant variant, uint32_t n_stages, uint32_t k_cells) {
    if (n_stages < 1 || k_cells < 1) throw ParseError("gen_property_a needs at least one stage and cell");
    auto cell_size = [&](uint32_t n, uint32_t k) -> uint64_t {
        const uint64_t base = (uint64_t(1) << n) * (n + 1);
        return variant == PropertyAVariant::EqualCells ? base : base + uint64_t(k) * (n + 1);
    };
    uint64_t total = 0;
    for (uint32_t n = 0; n < n_stages; ++n)
        for (uint32_t k = 0; k < k_cells; ++k) total += cell_size(n, k);
    if (total > 4096) throw SizeGuard("gen_property_a ground above 4096 points");
    uint64_t combos = 1;
    for (uint32_t n = 0; n < n_stages; ++n) {
        combos *= k_cells;
        if (combos > 4096) throw SizeGuard("gen_property_a: too many cell choices");
    }

    const uint32_t size = static_cast<uint32_t>(total);
    Ground ground(size);
    std::vector<PointSet> stages;
    std::vector<std::vector<PointSet>> cells;
    std::vector<std::vector<Measure>> cell_measures;
    uint32_t base = 0;
    for (uint32_t n = 0; n < n_stages; ++n) {
        PointSet stage(size);
        std::vector<PointSet> row_cells;
        std::vector<Measure> row_measures;
        for (uint32_t k = 0; k < k_cells; ++k) {
            const uint32_t sz = static_cast<uint32_t>(cell_size(n, k));
            PointSet cell(size);
            for (uint32_t i = 0; i < sz; ++i) cell.add(base + i);
            base += sz;
            stage |= cell;
            std::vector<Rat> w(size, Rat(0));
            const Rat unit(static_cast<long>(n) + 1, static_cast<long>(sz));
            cell.for_each([&](uint32_t p) { w[p] = unit; });
            row_measures.emplace_back(ground, std::move(w));
            row_cells.push_back(std::move(cell));
        }
        stages.push_back(std::move(stage));
        cells.push_back(std::move(row_cells));
        cell_measures.push_back(std::move(row_measures));
    }

    // sup over mu_s for every full-length cell choice s; shorter choices are
    // dominated coordinatewise, so they add nothing to the sup
    std::vector<Measure> sup_family;
    std::vector<uint32_t> choice(n_stages, 0);
    for (uint64_t it = 0; it < combos; ++it) {
        std::vector<Rat> w(size, Rat(0));
        for (uint32_t n = 0; n < n_stages; ++n) {
            const Measure& nu = cell_measures[n][choice[n]];
            cells[n][choice[n]].for_each([&](uint32_t p) { w[p] = nu.weight(p); });
        }
        sup_family.emplace_back(ground, std::move(w));
        for (uint32_t n = n_stages; n-- > 0;) {
            if (++choice[n] < k_cells) break;
            choice[n] = 0;
        }
    }
    Submeasure phi = Submeasure::sup(std::move(sup_family));
    return StagedFamily{variant, std::move(ground), std::move(stages), std::move(cells),
                        std::move(cell_measures), std::move(phi)};
}

struct PropertyABound {
    uint32_t stage_bound = 0; // least N with 2^-N < eps
    PointSet m_eps;           // points with phi({x}) >= eps
    PointSet allowed;         // union of the blocks the bound permits
    bool contained = false;
};

/// Finds the least N with 2^-N < eps and certifies, inside the truncation,
/// that every point of singleton value >= eps lies in B_0..B_{N-1} (and,
/// for growing cells, only in cells with 1/k >= eps).
inline PropertyABound property_a_bound(const StagedFamily& fam, const Rat& eps) {
    if (eps.sgn() <= 0) throw ParseError("property_a_bound needs eps > 0");
    PropertyABound out;
    while (pow2(-static_cast<long>(out.stage_bound)) >= eps) ++out.stage_bound;

    const uint32_t size = fam.ground.size();
    out.m_eps = PointSet(size);
    for (uint32_t p = 0; p < size; ++p) {
        PointSet single(size);
        single.add(p);
        if (fam.phi.eval(single) >= RatX(eps)) out.m_eps.add(p);
    }
    out.allowed = PointSet(size);
    for (uint32_t n = 0; n < fam.stages.size() && n < out.stage_bound; ++n) {
        if (fam.variant == PropertyAVariant::EqualCells) {
            out.allowed |= fam.stages[n];
        } else {
            for (uint32_t k = 0; k < fam.cells[n].size(); ++k)
                if (k == 0 || Rat(1, static_cast<long>(k)) >= eps) out.allowed |= fam.cells[n][k];
        }
    }
    out.contained = out.m_eps.subset_of(out.allowed);
    return out;
}

/// Columns m * e_n for n in the m-th block (blocks are 1-indexed): the
/// square matrix whose induced ideal is generated by finite unions of
/// initial blocks.
inline VectorSequence gen_fin_times_empty(const std::vector<uint32_t>& block_sizes) {
    if (block_sizes.empty()) throw ParseError("gen_fin_times_empty needs at least one block");
    uint32_t n = 0;
    for (uint32_t s : block_sizes) {
        if (s == 0) throw ParseError("gen_fin_times_empty: empty block");
        n += s;
    }
    VectorSequence x(n, n, false);
    uint32_t base = 0;
    for (uint32_t b = 0; b < block_sizes.size(); ++b) {
        for (uint32_t i = 0; i < block_sizes[b]; ++i)
            x.at(base + i, base + i) = Rat(static_cast<long>(b) + 1);
        base += block_sizes[b];
    }
    return x;
}

} // namespace sml
