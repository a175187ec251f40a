#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/measure.hpp"
#include "sml/pathology.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/submeasure.hpp"
#include "sml/zoo.hpp"

namespace sml {

/// Total map between grounds; target points may have empty fibers.
struct PointMap {
    Ground source;
    Ground target;
    std::vector<uint32_t> map; // one target point per source point

    PointMap(Ground src, Ground tgt, std::vector<uint32_t> f)
        : source(std::move(src)), target(std::move(tgt)), map(std::move(f)) {
        if (map.size() != source.size()) throw ParseError("map: expected one image per source point");
        for (uint32_t v : map)
            if (v >= target.size()) throw ParseError("map: image point outside the target ground");
    }

    static PointMap identity(const Ground& g) {
        std::vector<uint32_t> f(g.size());
        for (uint32_t i = 0; i < g.size(); ++i) f[i] = i;
        return PointMap(g, g, std::move(f));
    }

    PointSet preimage(const PointSet& a) const {
        if (a.universe() != target.size()) throw GroundMismatch("preimage: set universe mismatch");
        PointSet s(source.size());
        for (uint32_t p = 0; p < map.size(); ++p)
            if (a.test(map[p])) s.add(p);
        return s;
    }
    PointSet image(const PointSet& a) const {
        if (a.universe() != source.size()) throw GroundMismatch("image: set universe mismatch");
        PointSet s(target.size());
        a.for_each([&](uint32_t p) { s.add(map[p]); });
        return s;
    }
};

/// Pushforward phi_f(A) = phi(f^{-1}(A)). Sup-of-measures sources push
/// measure by measure (the image of a measure is a measure); every other
/// representation materializes a table on the target, guarded at 16 points.
/// Empty fibers give value 0 on the corresponding singletons.
inline Submeasure pushforward(const Submeasure& phi, const PointMap& f) {
    if (phi.ground() != f.source) throw GroundMismatch("pushforward: submeasure lives on a different ground");
    if (phi.kind() == ReprKind::SupMeasures) {
        std::vector<Measure> out;
        for (const Measure& m : phi.sup_repr().measures) {
            std::vector<Rat> w(f.target.size(), Rat(0));
            for (uint32_t p = 0; p < f.map.size(); ++p) w[f.map[p]] += m.weight(p);
            out.emplace_back(f.target, std::move(w));
        }
        return Submeasure::sup(std::move(out));
    }
    const uint32_t n = f.target.size();
    if (n > 16) throw SizeGuard("pushforward table above 16 target points");
    std::vector<std::pair<PointSet, RatX>> entries;
    entries.reserve(size_t(1) << n);
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
        PointSet a = PointSet::from_mask(n, m);
        entries.emplace_back(a, phi.eval(f.preimage(a)));
    }
    return Submeasure::table(f.target, std::move(entries));
}

struct MonotonicityCheck {
    PathologyReport source;
    PathologyReport pushed;
    bool comparable = false; // both degrees defined
    bool holds = false;      // P(phi_f) <= P(phi)
};

/// Exhaustive degrees on both sides of a pushforward, with the
/// never-increases verdict. Undefined degrees are reported, not compared.
inline MonotonicityCheck pathology_monotonicity_check(const Submeasure& phi, const PointMap& f,
                                                      uint32_t max_ground = 12) {
    if (phi.ground().size() > max_ground || f.target.size() > max_ground)
        throw SizeGuard("pathology_monotonicity_check grounds above " + std::to_string(max_ground));
    DegreeOptions opts;
    opts.max_ground = max_ground;
    MonotonicityCheck out{pathology_degree(phi, DegreeScope::AllSubsets, {}, opts),
                          pathology_degree(pushforward(phi, f), DegreeScope::AllSubsets, {}, opts),
                          false, false};
    out.comparable = out.source.defined && out.pushed.defined;
    if (out.comparable) out.holds = out.pushed.degree <= out.source.degree;
    return out;
}

// ---------------------------------------------------------------------------
// the explicit reduction from the function-space restriction to the
// clopen-half levels

struct SoleckiReduction {
    uint32_t n;               // source level: injective functions on 2^n
    MazurExample mazur;       // the full function space K_{2^n} with its hats
    SoleckiExample solecki;   // the target Omega_{n+1}
    PointSet x_rows;          // the injective functions inside K_{2^n}
    PointMap f;               // relabeled X -> Omega_{n+1}
    std::vector<uint32_t> x_points; // original K indices of the rows of X, ascending
};

/// f(r) drops the cylinders indexed by the range of r; injectivity drops
/// exactly half of them, so the image lands in Omega_{n+1}.
inline SoleckiReduction solecki_reduction_map(uint32_t n) {
    if (n < 1 || n > 2) throw SizeGuard("solecki_reduction_map supports n = 1..2");
    const uint32_t dom = uint32_t(1) << n;   // 2^n
    const uint32_t cod = 2 * dom;            // 2^{n+1} values and cylinders
    MazurExample mz = gen_mazur(dom);
    SoleckiExample so = gen_solecki(n + 1);

    PointSet x_rows(mz.ground.size());
    std::vector<uint32_t> x_points;
    std::vector<uint32_t> images;
    for (uint32_t fidx = 0; fidx < mz.ground.size(); ++fidx) {
        uint32_t range_mask = 0, v = fidx;
        bool injective = true;
        for (uint32_t i = 0; i < dom; ++i) {
            const uint32_t val = v % cod;
            if (range_mask & (uint32_t(1) << val)) injective = false;
            range_mask |= uint32_t(1) << val;
            v /= cod;
        }
        if (!injective) continue;
        x_rows.add(fidx);
        x_points.push_back(fidx);
        const uint32_t target_mask = (~range_mask) & ((uint32_t(1) << cod) - 1);
        uint32_t idx = UINT32_MAX;
        for (uint32_t p = 0; p < so.masks.size(); ++p)
            if (so.masks[p] == target_mask) {
                idx = p;
                break;
            }
        if (idx == UINT32_MAX) throw Error("solecki_reduction_map: image mask escaped Omega");
        images.push_back(idx);
    }

    std::vector<std::string> labels;
    for (uint32_t p : x_points) labels.push_back(mz.ground.label(p));
    Ground src(static_cast<uint32_t>(x_points.size()), std::move(labels));
    PointMap f(src, so.ground, std::move(images));
    return SoleckiReduction{n, std::move(mz), std::move(so), std::move(x_rows), std::move(f),
                            std::move(x_points)};
}

struct ReductionCheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReductionReport {
    uint32_t n = 0;
    std::vector<ReductionCheckRow> rows;
    bool all_pass = true;

    void add(std::string name, bool pass, std::string detail = "") {
        all_pass = all_pass && pass;
        rows.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// Finite verification of the reduction: fibers of target hats are exactly
/// source hats restricted to X (cover value 1), rows avoiding N values map
/// into N target hats, and X itself needs 2^n + 1 hats to cover.
inline ReductionReport verify_solecki_reduction(uint32_t n, uint32_t max_backward = 2) {
    SoleckiReduction red = solecki_reduction_map(n);
    ReductionReport rep;
    rep.n = n;
    const uint32_t dom = uint32_t(1) << n;
    const uint32_t cod = 2 * dom;
    const uint32_t nx = red.f.source.size();

    // forward: f^{-1}(hat_j of Omega) = (hat_j of K) cap X, with cover value 1
    for (uint32_t j = 0; j < cod; ++j) {
        PointSet fiber_in_k(red.mazur.ground.size());
        const PointSet fiber = red.f.preimage(red.solecki.hats[j]);
        fiber.for_each([&](uint32_t r) { fiber_in_k.add(red.x_points[r]); });
        const PointSet expected = red.mazur.hats[j] & red.x_rows;
        const bool same = fiber_in_k == expected;
        RatX cover = red.mazur.psi.eval(fiber_in_k);
        rep.add("forward cylinder " + cylinder_label(n + 1, j),
                same && cover == RatX(1),
                "fiber = hat cap X: " + std::string(same ? "yes" : "no") + ", cover value " + cover.str());
    }

    // backward: for each J of N avoided values, the image of the avoiding
    // rows is inside every hat of J, hence covered by N hats
    for (uint32_t nn = 1; nn <= max_backward; ++nn) {
        std::vector<uint32_t> idx(nn);
        for (uint32_t i = 0; i < nn; ++i) idx[i] = i;
        bool all = true;
        uint32_t cases = 0;
        do {
            PointSet rows(nx);
            for (uint32_t r = 0; r < nx; ++r) {
                bool avoids = true;
                uint32_t v = red.x_points[r];
                uint32_t range_mask = 0;
                for (uint32_t i = 0; i < dom; ++i) {
                    range_mask |= uint32_t(1) << (v % cod);
                    v /= cod;
                }
                for (uint32_t ji : idx)
                    if (range_mask & (uint32_t(1) << ji)) avoids = false;
                if (avoids) rows.add(r);
            }
            PointSet image = red.f.image(rows);
            bool inside = true;
            for (uint32_t ji : idx)
                if (!image.subset_of(red.solecki.hats[ji])) inside = false;
            RatX cover = image.empty() ? RatX(0) : red.solecki.chi.eval(image);
            all = all && inside && cover <= RatX(long(nn));
            ++cases;
        } while (next_combination(idx, cod));
        rep.add("backward N=" + std::to_string(nn), all,
                std::to_string(cases) + " avoided-value sets checked");
    }

    // positivity: X needs 2^n + 1 hats
    RatX xcover = red.mazur.psi.eval(red.x_rows);
    rep.add("positivity", xcover == RatX(long(dom) + 1),
            "min hat-cover of X = " + xcover.str() + ", threshold " + std::to_string(dom));
    return rep;
}

} // namespace sml
