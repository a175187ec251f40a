#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sml/banach.hpp"
#include "sml/coloring.hpp"
#include "sml/errors.hpp"
#include "sml/pathology.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/reduction.hpp"
#include "sml/rng.hpp"
#include "sml/submeasure.hpp"
#include "sml/zoo.hpp"

namespace sml {

/// One assertion of a verification suite. `basis` records where the
/// expected value comes from: "reference" (stated in the source
/// literature), "axiom" (immediate from a definition), or "oracle"
/// (computed by an independent route).
struct VerifyRow {
    std::string name;
    std::string expected;
    std::string basis;
    std::string computed;
    bool pass = false;
};

struct VerifySuite {
    std::string target;
    std::vector<VerifyRow> rows;
    bool all_pass = true;

    void add(std::string name, std::string expected, std::string basis, std::string computed) {
        VerifyRow row{std::move(name), std::move(expected), std::move(basis), std::move(computed), false};
        row.pass = row.expected == row.computed;
        all_pass = all_pass && row.pass;
        rows.push_back(std::move(row));
    }
};

struct VerifyParams {
    int level = -1;    // -1: the target's default levels
    uint64_t seed = 1;
    bool quick = false;
};

namespace verify_detail {

inline std::string set_str(const PointSet& s) {
    std::string out = "[";
    bool first = true;
    for (uint32_t p : s.points()) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "]";
}

inline std::string weights_str(const Measure& m, const PointSet& support) {
    std::string out = "[";
    bool first = true;
    support.for_each([&](uint32_t p) {
        if (!first) out += ",";
        out += m.weight(p).str();
        first = false;
    });
    return out + "]";
}

inline std::string counter(uint64_t good, uint64_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

inline PointSet random_subset(SplitMix64& rng, uint32_t n) {
    PointSet s(n);
    for (uint32_t p = 0; p < n; ++p)
        if (rng.coin()) s.add(p);
    return s;
}

inline PointSet random_nonempty_subset(SplitMix64& rng, uint32_t n) {
    PointSet s = random_subset(rng, n);
    if (s.empty()) s.add(static_cast<uint32_t>(rng.below(n)));
    return s;
}

/// Random submeasure rotating through the cover, sup and chain kinds, with
/// every singleton finite (covered).
inline Submeasure random_submeasure(SplitMix64& rng, uint32_t n) {
    Ground g(n);
    switch (rng.below(3)) {
        case 0: {
            std::vector<PointSet> family;
            const uint32_t k = 3 + static_cast<uint32_t>(rng.below(4));
            for (uint32_t i = 0; i < k; ++i) family.push_back(random_nonempty_subset(rng, n));
            PointSet covered(n);
            for (const PointSet& s : family) covered |= s;
            for (uint32_t p = 0; p < n; ++p)
                if (!covered.test(p)) {
                    PointSet s(n);
                    s.add(p);
                    family.push_back(std::move(s));
                }
            return Submeasure::min_cover_repr(g, std::move(family));
        }
        case 1: {
            const uint32_t k = 1 + static_cast<uint32_t>(rng.below(3));
            std::vector<Measure> ms;
            bool positive = false;
            for (uint32_t i = 0; i < k; ++i) {
                std::vector<Rat> w(n);
                for (uint32_t p = 0; p < n; ++p) {
                    if (rng.below(4) == 0) continue;
                    w[p] = random_rat01(rng, 8) * Rat(static_cast<long>(1 + rng.below(2)));
                    if (!w[p].is_zero()) positive = true;
                }
                ms.emplace_back(g, std::move(w));
            }
            if (!positive) {
                std::vector<Rat> w(n, Rat(0));
                w[0] = Rat(1);
                ms.emplace_back(g, std::move(w));
            }
            return Submeasure::sup(std::move(ms));
        }
        default: {
            std::vector<PointSet> gens;
            const uint32_t k = 2 + static_cast<uint32_t>(rng.below(4));
            for (uint32_t i = 0; i < k; ++i) gens.push_back(random_nonempty_subset(rng, n));
            return Submeasure::mazur_chain(g, std::move(gens), AritySchedule::constant(2));
        }
    }
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// the named verification suites

inline VerifySuite verify_minpath(const VerifyParams&) {
    using namespace verify_detail;
    VerifySuite suite{"minpath"};
    const Submeasure phi = gen_minimal_pathological();
    suite.add("eval {0,1}", "1/1", "reference", phi.eval(PointSet::of(3, {0, 1})).str());
    suite.add("eval {0,1,2}", "2/1", "reference", phi.eval(PointSet::full(3)).str());
    const HatResult h = hat(phi, PointSet::full(3));
    suite.add("hat {0,1,2}", "3/2", "oracle", h.value.str());
    suite.add("hat witness", "[1/2,1/2,1/2]", "oracle", weights_str(h.witness, PointSet::full(3)));
    const PathologyReport rep = pathology_degree(phi, DegreeScope::AllSubsets);
    suite.add("degree (all 8 subsets)", "4/3", "oracle", rep.degree.str());
    suite.add("degree argmax", "[0,1,2]", "oracle", set_str(rep.argmax));
    const auto crit = pathological_criterion(phi);
    suite.add("criterion witness", "[0,1,2]", "reference", crit ? set_str(*crit) : "none");
    return suite;
}

inline VerifySuite verify_mazur_degree(const VerifyParams& p) {
    VerifySuite suite{"mazur-degree"};
    auto family_scope = [&](uint32_t n) {
        const MazurExample mz = gen_mazur(n);
        const PointSet full = PointSet::full(mz.ground.size());
        const HatResult h = hat(mz.psi, full);
        suite.add("hat(K_" + std::to_string(n) + ")", "2/1", "oracle", h.value.str());
        const PathologyReport rep = pathology_degree(mz.psi, DegreeScope::GivenFamily, {full});
        suite.add("ratio at K_" + std::to_string(n), Rat(static_cast<long>(n) + 1, 2).str(),
                  "reference", rep.degree.str());
    };
    auto sweep2 = [&]() {
        const MazurExample mz = gen_mazur(2);
        const PathologyReport rep = pathology_degree(mz.psi, DegreeScope::AllSubsets);
        suite.add("degree of psi_2 (all 2^16 subsets)", "3/2", "reference", rep.degree.str());
    };
    if (p.level == 2) {
        if (p.quick) family_scope(2);
        else sweep2();
    } else if (p.level == 3 || p.level == 4) {
        family_scope(static_cast<uint32_t>(p.level));
    } else {
        if (p.quick) family_scope(2);
        else sweep2();
        family_scope(3);
        family_scope(4);
    }
    return suite;
}

inline VerifySuite verify_covering_numbers(const VerifyParams&) {
    VerifySuite suite{"covering-numbers"};
    for (uint32_t n = 2; n <= 4; ++n) {
        const MazurExample mz = gen_mazur(n);
        const CoveringStats st = covering_stats(mz.cover);
        suite.add("mazur n=" + std::to_string(n) + " m", std::to_string(n), "reference",
                  std::to_string(st.m));
        suite.add("mazur n=" + std::to_string(n) + " delta", "1/2", "reference", st.delta.str());
    }
    for (uint32_t n = 2; n <= 4; ++n) {
        const SoleckiExample so = gen_solecki(n);
        const CoveringStats st = covering_stats(so.cover);
        suite.add("solecki n=" + std::to_string(n) + " delta", "1/2", "reference", st.delta.str());
    }
    for (uint32_t n = 2; n <= 5; ++n) {
        const EdFinInstance ef = gen_edfin(n);
        const CoveringStats st = covering_stats(ef.chains);
        uint64_t fact = 1;
        for (uint64_t i = 2; i <= n + 1; ++i) fact *= i;
        suite.add("edfin n=" + std::to_string(n) + " family size", std::to_string(fact),
                  "reference", std::to_string(ef.chains.family.size()));
        suite.add("edfin n=" + std::to_string(n) + " delta",
                  Rat(1, static_cast<long>(n) + 1).str(), "reference", st.delta.str());
    }
    return suite;
}

inline VerifySuite verify_solecki_chi(const VerifyParams&) {
    using namespace verify_detail;
    VerifySuite suite{"solecki-chi"};
    for (uint32_t n = 2; n <= 4; ++n) {
        const SoleckiExample so = gen_solecki(n);
        const long expected = (1L << (n - 1)) + 1;
        suite.add("chi(Omega_" + std::to_string(n) + ")", RatX(expected).str(), "reference",
                  so.chi.eval(PointSet::full(so.ground.size())).str());
    }
    for (uint32_t n = 2; n <= 3; ++n) {
        const SoleckiExample so = gen_solecki(n);
        const uint32_t half = uint32_t(1) << (n - 1);
        const PointSet full = PointSet::full(so.ground.size());
        uint64_t covering_small = 0, total_small = 0, covering_big = 0, total_big = 0;
        for (uint32_t size : {half, half + 1}) {
            std::vector<uint32_t> idx(size);
            for (uint32_t i = 0; i < size; ++i) idx[i] = i;
            do {
                PointSet u(so.ground.size());
                for (uint32_t i : idx) u |= so.hats[i];
                const bool covers = u == full;
                if (size == half) {
                    ++total_small;
                    if (covers) ++covering_small;
                } else {
                    ++total_big;
                    if (covers) ++covering_big;
                }
            } while (next_combination(idx, static_cast<uint32_t>(so.hats.size())));
        }
        suite.add("Omega_" + std::to_string(n) + ": covering " + std::to_string(half) +
                      "-subfamilies",
                  counter(0, total_small), "reference", counter(covering_small, total_small));
        suite.add("Omega_" + std::to_string(n) + ": covering " + std::to_string(half + 1) +
                      "-subfamilies",
                  counter(total_big, total_big), "reference", counter(covering_big, total_big));
    }
    return suite;
}

inline VerifySuite verify_edfin_nonpath(const VerifyParams&) {
    VerifySuite suite{"edfin-nonpath"};
    const EdFinInstance ef = gen_edfin(2);
    const PathologyReport rep = pathology_degree(ef.psi, DegreeScope::AllSubsets);
    suite.add("degree of edfin psi at n=2 (all subsets)", "1/1", "reference", rep.degree.str());
    return suite;
}

inline VerifySuite verify_uniform_bound(const VerifyParams& p) {
    using namespace verify_detail;
    VerifySuite suite{"uniform-bound"};
    const uint64_t cases = p.quick ? 50 : 200;
    SplitMix64 root(p.seed);
    uint64_t good = 0;
    for (uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = root.split(i);
        const uint32_t n = 4 + static_cast<uint32_t>(rng.below(7));
        Ground g(n);
        std::vector<PointSet> family;
        const uint32_t nsets = 2 + static_cast<uint32_t>(rng.below(4));
        for (uint32_t s = 0; s < nsets; ++s) family.push_back(random_nonempty_subset(rng, n));
        PointSet covered(n);
        for (const PointSet& s : family) covered |= s;
        for (uint32_t pt = 0; pt < n; ++pt)
            if (!covered.test(pt)) {
                PointSet s(n);
                s.add(pt);
                family.push_back(std::move(s));
            }
        const uint32_t nmeas = 1 + static_cast<uint32_t>(rng.below(3));
        std::vector<Measure> ms;
        for (uint32_t k = 0; k < nmeas; ++k) {
            std::vector<Rat> w(n);
            for (uint32_t pt = 0; pt < n; ++pt)
                w[pt] = random_rat01(rng, 8) * Rat(static_cast<long>(1 + rng.below(2)));
            ms.emplace_back(g, std::move(w));
        }
        const Submeasure phi = Submeasure::sup(std::move(ms));
        CoveringInstance inst{g, family};
        Rat m_cap(0);
        for (const PointSet& s : family) m_cap = max(m_cap, phi.eval(s).finite());
        const UniformBoundCertificate cert = uniform_bound_check(phi, inst, m_cap);
        if (cert.within) ++good;
    }
    suite.add("dominated mass within M/delta", counter(cases, cases), "oracle", counter(good, cases));
    return suite;
}

inline VerifySuite verify_color1_bound(const VerifyParams& p) {
    using namespace verify_detail;
    VerifySuite suite{"color1-bound"};
    const uint64_t cases = p.quick ? 200 : 1000;
    SplitMix64 root(p.seed);
    uint64_t good = 0;
    for (uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = root.split(i);
        const uint32_t rows = 1 + static_cast<uint32_t>(rng.below(5));
        const uint32_t cols = 3 + static_cast<uint32_t>(rng.below(8));
        VectorSequence mat(rows, cols, false);
        for (uint32_t k = 0; k < rows; ++k)
            for (uint32_t n = 0; n < cols; ++n)
                if (rng.below(3) != 0) mat.at(k, n) = random_rat01(rng, 16);
        const PartitionSystem ps = level_partition(mat);
        const PairColoring c = c0tall_coloring(ps);
        const auto h = largest_homogeneous(c, 1, cols);
        if (!h) continue;
        const Color1BoundCertificate cert = verify_color1_bound(ps, *h);
        if (cert.within) ++good;
    }
    suite.add("1-homogeneous max row mass at most 2", counter(cases, cases), "oracle",
              counter(good, cases));
    return suite;
}

inline VerifySuite verify_dyadic_round(const VerifyParams& p) {
    using namespace verify_detail;
    VerifySuite suite{"dyadic-round"};
    const uint64_t cases = p.quick ? 200 : 1000;
    SplitMix64 root(p.seed);
    uint64_t good = 0;
    for (uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = root.split(i);
        const uint32_t rows = 1 + static_cast<uint32_t>(rng.below(4));
        const uint32_t cols = 2 + static_cast<uint32_t>(rng.below(9));
        VectorSequence mat(rows, cols, false);
        for (uint32_t k = 0; k < rows; ++k)
            for (uint32_t n = 0; n < cols; ++n)
                if (rng.below(4) != 0) mat.at(k, n) = random_rat01(rng, 32);
        const VectorSequence lam = dyadic_round(mat);
        bool ok = true;
        for (uint32_t n = 0; n < cols && ok; ++n) {
            const Rat bound = pow2(-static_cast<long>(n));
            for (uint32_t k = 0; k < rows && ok; ++k) {
                if (lam.at(k, n) > mat.at(k, n)) ok = false;
                if (mat.at(k, n) - lam.at(k, n) > bound) ok = false;
            }
        }
        if (ok) ++good;
    }
    suite.add("rounded below and within the column error", counter(cases, cases), "oracle",
              counter(good, cases));
    return suite;
}

inline VerifySuite verify_rk_solecki(const VerifyParams& p) {
    VerifySuite suite{"rk-solecki"};
    const uint32_t level = p.level == 2 ? 2 : 1;
    const SoleckiReduction red = solecki_reduction_map(level);
    suite.add("|X|", level == 1 ? "12" : "1680", "oracle", std::to_string(red.f.source.size()));
    const ReductionReport rep = verify_solecki_reduction(level);
    for (const ReductionCheckRow& row : rep.rows)
        suite.add(row.name, "pass", "oracle", row.pass ? "pass" : ("fail: " + row.detail));
    return suite;
}

inline VerifySuite verify_rk_monotone(const VerifyParams& p) {
    using namespace verify_detail;
    VerifySuite suite{"rk-monotone"};
    const uint64_t cases = p.quick ? 25 : 100;
    SplitMix64 root(p.seed);
    uint64_t monotone = 0, hat_ok = 0, comparable = 0;
    for (uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = root.split(i);
        const uint32_t ns = 3 + static_cast<uint32_t>(rng.below(6)); // 3..8
        const uint32_t nt = 2 + static_cast<uint32_t>(rng.below(5)); // 2..6
        const Submeasure phi = random_submeasure(rng, ns);
        std::vector<uint32_t> fmap(ns);
        for (uint32_t s = 0; s < ns; ++s) fmap[s] = static_cast<uint32_t>(rng.below(nt));
        const PointMap f(phi.ground(), Ground(nt), std::move(fmap));

        const MonotonicityCheck check = pathology_monotonicity_check(phi, f);
        if (check.comparable) {
            ++comparable;
            if (check.holds) ++monotone;
        } else {
            ++monotone; // nothing to compare, nothing to violate
        }

        const Submeasure pushed = pushforward(phi, f);
        bool all = true;
        for (uint64_t m = 0; m < (uint64_t(1) << nt) && all; ++m) {
            const PointSet a = PointSet::from_mask(nt, m);
            const Rat lhs = hat(pushed, a).value;
            const Rat rhs = hat(phi, f.preimage(a)).value;
            if (lhs < rhs) all = false;
        }
        if (all) ++hat_ok;
    }
    suite.add("degree never increases", counter(cases, cases), "oracle", counter(monotone, cases));
    suite.add("hat(phi_f)(A) >= hat(phi)(f^-1 A) on all subsets", counter(cases, cases), "oracle",
              counter(hat_ok, cases));
    return suite;
}

inline VerifySuite verify_banach_roundtrip(const VerifyParams& p) {
    using namespace verify_detail;
    VerifySuite suite{"banach-roundtrip"};
    const uint64_t cases = p.quick ? 25 : 100;
    SplitMix64 root(p.seed);
    uint64_t round = 0, degree1 = 0;
    for (uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = root.split(i);
        const uint32_t n = 4 + static_cast<uint32_t>(rng.below(7)); // 4..10
        const uint32_t k = 1 + static_cast<uint32_t>(rng.below(6)); // 1..6 measures
        Ground g(n);
        std::vector<Measure> ms;
        bool positive = false;
        for (uint32_t r = 0; r < k; ++r) {
            std::vector<Rat> w(n);
            for (uint32_t pt = 0; pt < n; ++pt) {
                if (rng.below(4) == 0) continue;
                w[pt] = random_rat01(rng, 8) * Rat(static_cast<long>(1 + rng.below(2)));
                if (!w[pt].is_zero()) positive = true;
            }
            ms.emplace_back(g, std::move(w));
        }
        if (!positive) {
            std::vector<Rat> w(n, Rat(0));
            w[0] = Rat(1);
            ms.emplace_back(g, std::move(w));
        }
        const Submeasure phi = Submeasure::sup(std::move(ms));
        const VectorSequence x = sequence_of_phi(phi);
        const Submeasure back = phi_of_sequence(x);
        if (phi.eval_table(PointSet::full(n)) == back.eval_table(PointSet::full(n))) ++round;
        const PathologyReport rep = pathology_degree(back, DegreeScope::AllSubsets);
        if (rep.defined && rep.degree == RatX(1)) ++degree1;
    }
    suite.add("exact round trips", counter(cases, cases), "oracle", counter(round, cases));
    suite.add("degree of phi_x equals 1", counter(cases, cases), "oracle", counter(degree1, cases));
    return suite;
}

inline VerifySuite verify_property_a(const VerifyParams&) {
    using namespace verify_detail;
    VerifySuite suite{"property-a"};
    const StagedFamily a = gen_property_a(PropertyAVariant::EqualCells, 4, 2);
    for (uint32_t n = 0; n < 4; ++n) {
        bool all = true;
        const Rat expect = pow2(-static_cast<long>(n));
        a.stages[n].for_each([&](uint32_t x) {
            PointSet s(a.ground.size());
            s.add(x);
            if (a.phi.eval(s) != RatX(expect)) all = false;
        });
        suite.add("variant a: phi({x}) on B_" + std::to_string(n), expect.str(), "reference",
                  all ? expect.str() : "varies");
    }
    {
        bool all = true;
        for (uint32_t n = 0; n < 4; ++n)
            for (uint32_t k = 0; k < 2; ++k)
                if (a.phi.eval(a.cells[n][k]) != RatX(static_cast<long>(n) + 1)) all = false;
        suite.add("variant a: phi(B_n^k) = n+1", "all cells", "reference",
                  all ? "all cells" : "mismatch");
    }
    {
        const PropertyABound b = property_a_bound(a, Rat(1, 4));
        suite.add("variant a: stage bound for eps=1/4", "3", "oracle", std::to_string(b.stage_bound));
        PointSet first3(a.ground.size());
        for (uint32_t n = 0; n < 3; ++n) first3 |= a.stages[n];
        suite.add("variant a: M_eps inside B_0..B_2", "yes", "reference",
                  b.contained && b.m_eps.subset_of(first3) ? "yes" : "no");
        const PropertyABound big = property_a_bound(a, Rat(2));
        suite.add("variant a: eps=2 gives empty M_eps at stage bound 0", "0 and empty", "axiom",
                  std::to_string(big.stage_bound) + (big.m_eps.empty() ? " and empty" : " and nonempty"));
    }
    const StagedFamily b = gen_property_a(PropertyAVariant::GrowingCells, 3, 3);
    {
        bool all = true;
        for (uint32_t n = 0; n < 3; ++n)
            for (uint32_t k = 0; k < 3; ++k) {
                const Rat expect = Rat(1, (1L << n) + static_cast<long>(k));
                const PointSet& cell = b.cells[n][k];
                const Rat got = b.cell_measures[n][k].weight(cell.points()[0]);
                if (got != expect) all = false;
            }
        suite.add("variant b: nu_n^k({x}) = 1/(2^n + k)", "all cells", "reference",
                  all ? "all cells" : "mismatch");
    }
    {
        const PropertyABound bb = property_a_bound(b, Rat(1, 4));
        suite.add("variant b: M_eps finite and inside its cells", "yes", "reference",
                  bb.contained ? "yes" : "no");
    }
    return suite;
}

inline VerifySuite verify_axiom_suite(const VerifyParams& p) {
    VerifySuite suite{"axiom-suite"};
    AxiomOptions sampled;
    sampled.samples = p.quick ? 2000 : 10000;
    sampled.seed = p.seed;

    auto row = [&](const std::string& name, const Submeasure& phi) {
        const AxiomReport rep = check_axioms(phi, sampled);
        suite.add(name + " (" + rep.scope + ")", "pass", "oracle",
                  rep.pass() ? "pass" : std::to_string(rep.violations.size()) + " violations");
    };

    row("minimal pathological", gen_minimal_pathological());
    {
        const EdPair ed = gen_ed({3, 3});
        row("ed chain (3,3)", ed.chain);
        row("ed sup (3,3)", ed.sup);
    }
    for (uint32_t n = 2; n <= 5; ++n) row("edfin n=" + std::to_string(n), gen_edfin(n).psi);
    row("mazur n=2", gen_mazur(2).psi);
    row("mazur n=3", gen_mazur(3).psi);
    row("mazur n=4", gen_mazur(4).psi);
    row("solecki n=2", gen_solecki(2).chi);
    row("solecki n=3", gen_solecki(3).chi);
    row("solecki n=4", gen_solecki(4).chi);
    row("property-a variant a", gen_property_a(PropertyAVariant::EqualCells, 4, 2).phi);
    row("property-a variant b", gen_property_a(PropertyAVariant::GrowingCells, 3, 3).phi);
    row("fin-times-empty blocks 2,3,4", phi_of_sequence(gen_fin_times_empty({2, 3, 4})));
    return suite;
}

// ---------------------------------------------------------------------------
// dispatch

inline const std::vector<std::string>& verify_target_names() {
    static const std::vector<std::string> names = {
        "minpath",        "mazur-degree",  "covering-numbers", "solecki-chi",
        "edfin-nonpath",  "uniform-bound", "color1-bound",     "dyadic-round",
        "rk-solecki",     "rk-monotone",   "banach-roundtrip", "property-a",
        "axiom-suite",
    };
    return names;
}

inline VerifySuite run_verify_target(const std::string& name, const VerifyParams& p) {
    if (name == "minpath") return verify_minpath(p);
    if (name == "mazur-degree") return verify_mazur_degree(p);
    if (name == "covering-numbers") return verify_covering_numbers(p);
    if (name == "solecki-chi") return verify_solecki_chi(p);
    if (name == "edfin-nonpath") return verify_edfin_nonpath(p);
    if (name == "uniform-bound") return verify_uniform_bound(p);
    if (name == "color1-bound") return verify_color1_bound(p);
    if (name == "dyadic-round") return verify_dyadic_round(p);
    if (name == "rk-solecki") return verify_rk_solecki(p);
    if (name == "rk-monotone") return verify_rk_monotone(p);
    if (name == "banach-roundtrip") return verify_banach_roundtrip(p);
    if (name == "property-a") return verify_property_a(p);
    if (name == "axiom-suite") return verify_axiom_suite(p);
    throw ParseError("unknown verify target \"" + name + "\"");
}

inline std::vector<VerifySuite> run_verify_all(const VerifyParams& p) {
    std::vector<VerifySuite> out;
    for (const std::string& name : verify_target_names()) out.push_back(run_verify_target(name, p));
    return out;
}

} // namespace sml
