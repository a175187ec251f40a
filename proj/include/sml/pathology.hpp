#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sml/deadline.hpp"
#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/measure.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/simplex.hpp"
#include "sml/submeasure.hpp"

namespace sml {

// ---------------------------------------------------------------------------
// hat: the largest measure dominated by phi on a set

struct HatOptions {
    uint32_t max_subset = 14; // powerset constraint mode limit
};

struct HatResult {
    Rat value;
    Measure witness;     // dominated measure attaining the optimum, support in A
    std::string basis;   // constraint basis: "powerset" or "family"
};

/// Maximal mass on A of a measure dominated by phi, as an exact LP.
/// Constraint basis is representation-aware: min-cover submeasures get one
/// constraint per family set (mass(s & A) <= 1), every other representation
/// one constraint per nonempty subset of A. Support is restricted to A;
/// monotonicity extends domination to all sets.
inline HatResult hat(const Submeasure& phi, const PointSet& a, const HatOptions& opts = {}) {
    if (a.universe() != phi.ground().size()) throw GroundMismatch("hat: set universe mismatch");
    const bool family_mode = phi.kind() == ReprKind::MinCover;
    HatResult res{Rat(0), Measure::zero(phi.ground()), family_mode ? "family" : "powerset"};
    if (a.empty()) return res;

    const std::vector<uint32_t> pts = a.points();
    const uint32_t nv = static_cast<uint32_t>(pts.size());
    std::vector<int32_t> pos(phi.ground().size(), -1);
    for (uint32_t i = 0; i < nv; ++i) pos[pts[i]] = static_cast<int32_t>(i);

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    if (family_mode) {
        for (const PointSet& s : phi.cover_repr().family) {
            PointSet cut = s & a;
            if (cut.empty()) continue;
            std::vector<Rat> row(nv, Rat(0));
            cut.for_each([&](uint32_t p) { row[pos[p]] = Rat(1); });
            rows.push_back(std::move(row));
            rhs.emplace_back(1);
        }
    } else {
        if (nv > opts.max_subset)
            throw SizeGuard("hat powerset mode above " + std::to_string(opts.max_subset) + " points");
        const std::vector<RatX> values = phi.eval_table(a);
        const uint64_t total = uint64_t(1) << nv;
        for (uint64_t m = 1; m < total; ++m) {
            if (values[m].is_inf()) continue;
            std::vector<Rat> row(nv, Rat(0));
            for (uint32_t j = 0; j < nv; ++j)
                if (m & (uint64_t(1) << j)) row[j] = Rat(1);
            rows.push_back(std::move(row));
            rhs.push_back(values[m].finite());
        }
    }

    auto lp = SimplexMax::solve(rows, rhs, std::vector<Rat>(nv, Rat(1)));
    if (lp.status == SimplexMax::Status::Unbounded)
        throw InfiniteSingleton("hat LP unbounded: some singleton has infinite value");

    std::vector<Rat> w(phi.ground().size(), Rat(0));
    for (uint32_t i = 0; i < nv; ++i) w[pts[i]] = lp.x[i];
    res.value = lp.value;
    res.witness = Measure(phi.ground(), std::move(w));
    return res;
}

// ---------------------------------------------------------------------------
// degree of pathology

enum class DegreeScope { AllSubsets, GivenFamily };

struct DegreeOptions {
    uint32_t max_ground = 16;
    bool keep_rows = false;
    uint64_t deadline_ms = 0; // 0: no deadline; else stop and report partial progress
    HatOptions hat_opts;
};

struct PathologyRow {
    PointSet a;
    RatX phi_value;
    Rat hat_value;
    RatX ratio; // only meaningful when hat_value != 0
};

struct PathologyReport {
    DegreeScope scope = DegreeScope::AllSubsets;
    bool global = false;   // true only for the all-subsets sweep: max = the degree
    bool defined = false;  // false when every checked hat value is 0
    bool timed_out = false; // deadline expired: a partial sweep, never a global claim
    uint64_t sets_checked = 0;
    RatX degree;           // max ratio phi/hat over the scope
    PointSet argmax;
    std::vector<PathologyRow> rows;
};

/// P(phi) = max of phi(A)/hat(A) over the scope, skipping sets with
/// hat(A) = 0. The family scope never claims the global degree, only a
/// lower bound attained on the family.
inline PathologyReport pathology_degree(const Submeasure& phi, DegreeScope scope,
                                        const std::vector<PointSet>& family = {},
                                        const DegreeOptions& opts = {}) {
    PathologyReport rep;
    rep.scope = scope;
    rep.global = scope == DegreeScope::AllSubsets;
    rep.argmax = PointSet(phi.ground().size());

    auto consider = [&](const PointSet& a, const RatX& value) {
        if (a.empty()) return;
        HatResult h = hat(phi, a, opts.hat_opts);
        RatX ratio(0);
        const bool defined_here = !h.value.is_zero();
        if (defined_here)
            ratio = value.is_inf() ? RatX::inf() : RatX(value.finite() / h.value);
        if (opts.keep_rows) rep.rows.push_back({a, value, h.value, ratio});
        if (!defined_here) return;
        if (!rep.defined || ratio > rep.degree) {
            rep.defined = true;
            rep.degree = ratio;
            rep.argmax = a;
        } else if (ratio == rep.degree && size_lex_less(a, rep.argmax)) {
            rep.argmax = a;
        }
    };

    const Deadline deadline(opts.deadline_ms);
    if (scope == DegreeScope::AllSubsets) {
        const uint32_t n = phi.ground().size();
        if (n > opts.max_ground) throw SizeGuard("pathology_degree all-subsets above max ground");
        if (phi.kind() != ReprKind::MinCover && n > opts.hat_opts.max_subset)
            throw SizeGuard("pathology_degree all-subsets needs powerset hat above its limit; "
                            "use the family scope");
        const std::vector<RatX> values = phi.eval_table(phi.ground().full_set());
        const uint64_t total = uint64_t(1) << n;
        for (uint64_t m = 1; m < total; ++m) {
            if (deadline.expired()) {
                rep.timed_out = true;
                rep.global = false;
                break;
            }
            consider(PointSet::from_mask(n, m), values[m]);
            ++rep.sets_checked;
        }
    } else {
        for (const PointSet& a : family) {
            if (deadline.expired()) {
                rep.timed_out = true;
                break;
            }
            consider(a, phi.eval(a));
            ++rep.sets_checked;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// pathological criterion for integer-valued submeasures

struct CriterionOptions {
    uint32_t max_ground = 16;
};

/// First set A (size, then lex) with |A| >= 2, phi(A) < |A| and
/// phi(A minus x) < phi(A) for every x in A. Such a witness certifies
/// pathology; absence on a finite ground certifies nothing.
inline std::optional<PointSet> pathological_criterion(const Submeasure& phi,
                                                      const CriterionOptions& opts = {}) {
    const uint32_t n = phi.ground().size();
    if (n > opts.max_ground || n > 20)
        throw SizeGuard("pathological_criterion ground above " + std::to_string(opts.max_ground));
    const std::vector<RatX> v = phi.eval_table(phi.ground().full_set());
    for (const RatX& x : v)
        if (x.is_finite() && !x.is_integer())
            throw NonIntegerValue("pathological_criterion met value " + x.str());

    std::optional<PointSet> found;
    for_each_subset_size_lex(phi.ground().full_set(), 2, n, [&](const PointSet& a) {
        const uint64_t m = a.mask64();
        const RatX& va = v[m];
        if (va.is_inf() || !(va < RatX(long(a.count())))) return false;
        bool strict = true;
        a.for_each([&](uint32_t x) {
            if (!(v[m & ~(uint64_t(1) << x)] < va)) strict = false;
        });
        if (!strict) return false;
        found = a;
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------
// covering numbers

struct CoveringInstance {
    Ground ground;
    std::vector<PointSet> family;
};

struct CoveringStats {
    std::vector<uint64_t> b; // per point: number of family sets containing it
    uint64_t m = 0;          // min of b
    Rat delta;               // m / |family|
};

inline CoveringStats covering_stats(const CoveringInstance& inst) {
    const uint32_t n = inst.ground.size();
    CoveringStats st;
    st.b.assign(n, 0);
    for (const PointSet& s : inst.family) {
        if (s.universe() != n) throw GroundMismatch("covering family universe mismatch");
        s.for_each([&](uint32_t p) { ++st.b[p]; });
    }
    for (uint32_t p = 0; p < n; ++p)
        if (st.b[p] == 0)
            throw CoverageGap("point " + std::to_string(p) + " is in no family set");
    st.m = st.b[0];
    for (uint64_t c : st.b)
        if (c < st.m) st.m = c;
    st.delta = Rat(static_cast<long>(st.m), static_cast<long>(inst.family.size()));
    return st;
}

/// Kelley witness: an s in the family with pi(s) >= delta(K, S); the lowest
/// family index among the maximizers of pi(s). Always exists for a
/// probability measure on a covered ground.
inline uint32_t kelley_witness(const CoveringInstance& inst, const Measure& pi) {
    if (pi.ground().size() != inst.ground.size())
        throw GroundMismatch("kelley_witness: measure ground mismatch");
    if (!pi.is_probability())
        throw NotProbability("kelley_witness requires a probability measure, total " + pi.total().str());
    const CoveringStats st = covering_stats(inst);
    uint32_t best = 0;
    Rat best_mass = pi.mass(inst.family[0]);
    for (uint32_t i = 1; i < inst.family.size(); ++i) {
        Rat mass = pi.mass(inst.family[i]);
        if (mass > best_mass) {
            best = i;
            best_mass = mass;
        }
    }
    if (best_mass < st.delta)
        throw Error("kelley_witness: maximizer below delta; submeasure machinery is broken");
    return best;
}

// ---------------------------------------------------------------------------
// uniform bound on dominated measures

struct UniformBoundCertificate {
    Rat max_mass;   // LP maximum over measures with mass(s) <= phi(s) per family set
    Rat bound;      // M / delta
    Rat delta;
    Measure witness;
    bool within = false;
};

/// The covering-family relaxation of "every measure dominated by phi is
/// bounded": maximizes total mass subject to mass(s) <= phi(s) per family
/// set. The optimum dominates hat(K) and must stay below M/delta whenever
/// every family set has phi(s) <= M.
inline UniformBoundCertificate uniform_bound_check(const Submeasure& phi,
                                                   const CoveringInstance& inst, const Rat& m_cap) {
    if (inst.ground.size() != phi.ground().size())
        throw GroundMismatch("uniform_bound_check: instance ground mismatch");
    const CoveringStats st = covering_stats(inst);

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    const uint32_t n = inst.ground.size();
    for (size_t i = 0; i < inst.family.size(); ++i) {
        RatX v = phi.eval(inst.family[i]);
        if (!(v <= RatX(m_cap)))
            throw HypothesisFailure("family set " + std::to_string(i) + " has phi = " + v.str() +
                                    " above M = " + m_cap.str());
        if (inst.family[i].empty()) continue;
        std::vector<Rat> row(n, Rat(0));
        inst.family[i].for_each([&](uint32_t p) { row[p] = Rat(1); });
        rows.push_back(std::move(row));
        rhs.push_back(v.finite());
    }

    auto lp = SimplexMax::solve(rows, rhs, std::vector<Rat>(n, Rat(1)));
    if (lp.status == SimplexMax::Status::Unbounded)
        throw Error("uniform_bound_check: unbounded despite a covering family");

    UniformBoundCertificate cert{lp.value, m_cap / st.delta, st.delta,
                                 Measure(phi.ground(), lp.x), false};
    cert.within = cert.max_mass <= cert.bound;
    return cert;
}

// ---------------------------------------------------------------------------
// block-partition witness set

struct WitnessSetResult {
    PointSet b;            // union of the per-block Kelley picks
    Rat mass_b;            // mu(B)
    Rat mass_blocks;       // mu of the union of blocks
    Rat delta;
    bool certified = false; // mu(B) >= delta * mu(union of blocks)
    std::vector<int32_t> picks; // family index per block, -1 where mu(I_j) = 0
};

/// Per block, a covering set s_j with mu-restricted mass at least
/// delta * mu(I_j) (Kelley pick on the normalized restriction); returns
/// B = union of the picks with the mass certificate.
inline WitnessSetResult pathology_witness_set(const std::vector<PointSet>& blocks,
                                              const std::vector<std::vector<PointSet>>& families,
                                              const Measure& mu, const Rat& delta) {
    const uint32_t n = mu.ground().size();
    if (blocks.size() != families.size())
        throw HypothesisFailure("pathology_witness_set: one family per block required");
    if (delta.sgn() <= 0) throw HypothesisFailure("pathology_witness_set: delta must be positive");

    PointSet all(n);
    for (size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].universe() != n) throw GroundMismatch("block universe mismatch");
        if (blocks[j].intersects(all)) throw HypothesisFailure("blocks are not pairwise disjoint");
        all |= blocks[j];
        for (const PointSet& s : families[j])
            if (!s.subset_of(blocks[j]))
                throw HypothesisFailure("family set escapes its block " + std::to_string(j));
    }
    if (!mu.support().subset_of(all))
        throw HypothesisFailure("measure support escapes the blocks");

    WitnessSetResult res{PointSet(n), Rat(0), Rat(0), delta, false, {}};
    for (size_t j = 0; j < blocks.size(); ++j) {
        const std::vector<uint32_t> pts = blocks[j].points();
        if (pts.empty()) throw HypothesisFailure("empty block " + std::to_string(j));
        Ground sub(static_cast<uint32_t>(pts.size()));
        std::vector<int32_t> pos(n, -1);
        for (uint32_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int32_t>(i);
        CoveringInstance inst{sub, {}};
        for (const PointSet& s : families[j]) {
            PointSet t(sub.size());
            s.for_each([&](uint32_t p) { t.add(static_cast<uint32_t>(pos[p])); });
            inst.family.push_back(std::move(t));
        }
        CoveringStats st;
        try {
            st = covering_stats(inst);
        } catch (const CoverageGap&) {
            throw HypothesisFailure("family does not cover block " + std::to_string(j));
        }
        if (st.delta < delta)
            throw HypothesisFailure("delta exceeds the covering number of block " + std::to_string(j));

        Rat mass = mu.mass(blocks[j]);
        res.mass_blocks += mass;
        if (mass.is_zero()) {
            res.picks.push_back(-1);
            continue;
        }
        std::vector<Rat> w(sub.size());
        for (uint32_t i = 0; i < pts.size(); ++i) w[i] = mu.weight(pts[i]) / mass;
        uint32_t pick = kelley_witness(inst, Measure(sub, std::move(w)));
        res.picks.push_back(static_cast<int32_t>(pick));
        res.b |= families[j][pick];
    }
    res.mass_b = mu.mass(res.b);
    res.certified = res.mass_b >= delta * res.mass_blocks;
    return res;
}

} // namespace sml
