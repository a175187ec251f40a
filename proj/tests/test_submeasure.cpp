#include <doctest.h>

#include "oracles.hpp"
#include "sml/rng.hpp"
#include "sml/submeasure.hpp"
#include "sml/zoo.hpp"

using namespace sml;

namespace {

Submeasure minpath() { return gen_minimal_pathological(); }

} // namespace

TEST_CASE("table evaluation and its edge cases") {
    const Submeasure phi = minpath();
    CHECK(phi.eval(PointSet(3)) == RatX(0));
    CHECK(phi.eval(PointSet::of(3, {0, 1})) == RatX(1));
    CHECK(phi.eval(PointSet::full(3)) == RatX(2));
    CHECK_THROWS_AS(phi.eval(PointSet::of(4, {0})), GroundMismatch);

    // partial tables answer only what they list
    const Ground g(3);
    Submeasure partial = Submeasure::table(g, {{PointSet::of(3, {0}), RatX(1)}});
    CHECK(partial.eval(PointSet::of(3, {0})) == RatX(1));
    CHECK(partial.eval(PointSet(3)) == RatX(0));
    CHECK_THROWS_AS(partial.eval(PointSet::of(3, {1})), MissingTableEntry);

    CHECK_THROWS_AS(Submeasure::table(g, {{PointSet(3), RatX(1)}}), ParseError);
    CHECK_THROWS_AS(Submeasure::table(g, {{PointSet::of(3, {0}), RatX(1)},
                                          {PointSet::of(3, {0}), RatX(2)}}),
                    ParseError);
}

TEST_CASE("sup of measures evaluates to the pointwise maximum") {
    const Ground g(2);
    const Submeasure one = Submeasure::sup({Measure::counting(g, PointSet::full(2))});
    CHECK(one.eval(PointSet::full(2)) == RatX(2));
    const Submeasure two = Submeasure::sup({Measure(g, {Rat(1), Rat(0)}), Measure(g, {Rat(0), Rat(1)})});
    CHECK(two.eval(PointSet::full(2)) == RatX(1));
    CHECK_THROWS_AS(Submeasure::sup({}), ParseError);
    CHECK_THROWS_AS(Submeasure::sup({Measure::zero(g), Measure::zero(Ground(3))}), GroundMismatch);
}

TEST_CASE("chain values: singletons are 1, pairs of singletons meet at 2") {
    const Ground g(4);
    const Submeasure phi = mazur_from_chain(g, {});
    for (uint32_t p = 0; p < 4; ++p) {
        PointSet s(4);
        s.add(p);
        CHECK(phi.eval(s) == RatX(1));
    }
    CHECK(phi.eval(PointSet::of(4, {1, 3})) == RatX(2));
    CHECK(phi.eval(PointSet::full(4)) == RatX(3)); // 4 singletons, capacity 2^(n-1)
}

TEST_CASE("chain eval equals the literal closure iteration") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(4));
        std::vector<PointSet> gens;
        const uint32_t k = 1 + static_cast<uint32_t>(rng.below(4));
        for (uint32_t i = 0; i < k; ++i) {
            PointSet s(n);
            for (uint32_t p = 0; p < n; ++p)
                if (rng.coin()) s.add(p);
            if (!s.empty()) gens.push_back(std::move(s));
        }
        const AritySchedule arity = rng.coin() ? AritySchedule::constant(2) : AritySchedule::level();
        const Submeasure phi = Submeasure::mazur_chain(Ground(n), gens, arity);
        for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
            const PointSet a = PointSet::from_mask(n, m);
            CHECK(phi.eval(a) == oracles::chain_by_closure(phi.chain_repr().generators, arity, a));
        }
    }
}

TEST_CASE("level cap is an error distinct from a true infinity") {
    const Ground g(8);
    // singletons only, arity 2: the full set needs cover 8, level 4
    const Submeasure tight = Submeasure::mazur_chain(g, {}, AritySchedule::constant(2), 3);
    CHECK_THROWS_AS(tight.eval(PointSet::full(8)), LevelCapExceeded);
    const Submeasure fine = Submeasure::mazur_chain(g, {}, AritySchedule::constant(2), 4);
    CHECK(fine.eval(PointSet::full(8)) == RatX(4));
}

TEST_CASE("min-cover reports infinity where no cover exists") {
    const Ground g(3);
    const Submeasure phi = Submeasure::min_cover_repr(g, {PointSet::of(3, {0, 1})});
    CHECK(phi.eval(PointSet::of(3, {0, 1})) == RatX(1));
    CHECK(phi.eval(PointSet::of(3, {2})).is_inf());
    CHECK(phi.eval(PointSet(3)) == RatX(0));
}

TEST_CASE("axiom check is exhaustive on small grounds") {
    const AxiomReport good = check_axioms(minpath());
    CHECK(good.pass());
    CHECK(good.exhaustive);

    // monotonicity violation: phi({0}) = 2 > phi({0,1}) = 1
    const Ground g(2);
    const Submeasure bad = Submeasure::table(
        g, {{PointSet(2), RatX(0)},
            {PointSet::of(2, {0}), RatX(2)},
            {PointSet::of(2, {1}), RatX(1)},
            {PointSet::full(2), RatX(1)}});
    const AxiomReport rep = check_axioms(bad);
    CHECK_FALSE(rep.pass());
    bool found_monotone = false;
    for (const auto& v : rep.violations)
        if (v.kind == AxiomViolation::Kind::Monotonicity) found_monotone = true;
    CHECK(found_monotone);

    // subadditivity violation: phi({0,1}) = 3 > 1 + 1
    const Submeasure bad2 = Submeasure::table(
        g, {{PointSet(2), RatX(0)},
            {PointSet::of(2, {0}), RatX(1)},
            {PointSet::of(2, {1}), RatX(1)},
            {PointSet::full(2), RatX(3)}});
    const AxiomReport rep2 = check_axioms(bad2);
    bool found_subadd = false;
    for (const auto& v : rep2.violations)
        if (v.kind == AxiomViolation::Kind::Subadditivity) found_subadd = true;
    CHECK(found_subadd);
}

TEST_CASE("sampled axiom mode flags itself") {
    const MazurExample mz = gen_mazur(3);
    AxiomOptions opts;
    opts.samples = 500;
    const AxiomReport rep = check_axioms(mz.psi, opts);
    CHECK(rep.pass());
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.scope == "sampled");
}

TEST_CASE("direct sum adds across relabeled halves") {
    const Ground g1(3);
    const Submeasure phi0 = minpath();
    const Submeasure counting = Submeasure::sup({Measure::counting(Ground(1), PointSet::full(1))});
    const Submeasure sum = direct_sum(phi0, counting);
    CHECK(sum.ground().size() == 4);
    CHECK(sum.eval(PointSet::full(4)) == RatX(3));
    CHECK(sum.eval(PointSet::of(4, {0, 1, 2})) == RatX(2));
    CHECK(sum.eval(PointSet::of(4, {3})) == RatX(1));
    CHECK(check_axioms(sum).pass());
    const auto witness = pathological_criterion(sum);
    REQUIRE(witness.has_value());
    CHECK(*witness == PointSet::of(4, {0, 1, 2}));
}

TEST_CASE("kind-preserving direct sums evaluate identically to tables") {
    SplitMix64 rng(17);
    const Ground g(3);
    const Submeasure a = Submeasure::sup({Measure(g, {Rat(1), Rat(0), Rat(1, 2)}),
                                          Measure(g, {Rat(0), Rat(1), Rat(1, 3)})});
    const Submeasure b = Submeasure::sup({Measure(g, {Rat(2), Rat(0), Rat(0)})});
    const Submeasure s = direct_sum(a, b);
    CHECK(s.kind() == ReprKind::SupMeasures);
    for (uint64_t m = 0; m < 64; ++m) {
        const PointSet u = PointSet::from_mask(6, m);
        PointSet left(3), right(3);
        u.for_each([&](uint32_t p) {
            if (p < 3) left.add(p);
            else right.add(p - 3);
        });
        CHECK(s.eval(u) == a.eval(left) + b.eval(right));
    }

    const Submeasure ca = Submeasure::min_cover_repr(g, {PointSet::of(3, {0, 1}), PointSet::of(3, {2})});
    const Submeasure cb = Submeasure::min_cover_repr(g, {PointSet::full(3)});
    const Submeasure cs = direct_sum(ca, cb);
    CHECK(cs.kind() == ReprKind::MinCover);
    CHECK(cs.eval(PointSet::full(6)) == RatX(3));
}

TEST_CASE("restriction keeps values and representations") {
    const EdPair ed = gen_ed({3, 3});
    const PointSet delta = PointSet::of(6, {0, 3, 4}); // one point of B_0, two of B_1
    const Submeasure r = restrict_to(ed.sup, delta);
    CHECK(r.kind() == ReprKind::SupMeasures);
    for (uint64_t m = 0; m < 8; ++m) {
        PointSet sub = PointSet::from_mask(3, m);
        PointSet orig(6);
        const auto pts = delta.points();
        sub.for_each([&](uint32_t p) { orig.add(pts[p]); });
        CHECK(r.eval(sub) == ed.sup.eval(orig));
    }
    CHECK(restrict_to(ed.sup, PointSet::full(6)).eval(PointSet::full(6)) ==
          ed.sup.eval(PointSet::full(6)));
    CHECK_THROWS_AS(restrict_to(ed.sup, PointSet(6)), EmptyRestriction);

    // a restriction of a sup of measures stays nonpathological
    const PathologyReport rep = pathology_degree(r, DegreeScope::AllSubsets);
    CHECK(rep.degree == RatX(1));

    // restricting the block family to size-(k+1) pieces gives the finite
    // block instance, value for value
    const Submeasure edfin = gen_edfin(1).psi;
    CHECK(r.eval_table(PointSet::full(3)) == edfin.eval_table(PointSet::full(3)));
}

TEST_CASE("axiom deadline returns partial progress honestly") {
    const MazurExample mz = gen_mazur(2);
    AxiomOptions opts;
    opts.deadline_ms = 1;
    const AxiomReport partial = check_axioms(mz.psi, opts);
    if (partial.timed_out) {
        CHECK_FALSE(partial.pass());
        const AxiomReport full = check_axioms(mz.psi);
        CHECK(partial.checks < full.checks);
    }
}

TEST_CASE("integer probe finds minimal witnesses") {
    const Submeasure phi = minpath();
    const ProbeResult p2 = integer_valued_probe(phi, 2);
    CHECK(p2.attained);
    CHECK(p2.witness == PointSet::full(3));
    for (const auto& [x, v] : p2.deletions) CHECK(v < RatX(2));

    const ProbeResult p1 = integer_valued_probe(phi, 1);
    CHECK(p1.attained);
    CHECK(p1.witness == PointSet::of(3, {0}));

    const ProbeResult p9 = integer_valued_probe(phi, 9);
    CHECK_FALSE(p9.attained);
    CHECK(p9.note.find("finite") != std::string::npos);

    const Ground g(2);
    const Submeasure frac = Submeasure::sup({Measure(g, {Rat(1, 2), Rat(1, 2)})});
    CHECK_THROWS_AS(integer_valued_probe(frac, 1), NonIntegerValue);
}

TEST_CASE("probe on the function-space example: k=3 needs six functions") {
    const MazurExample mz = gen_mazur(2);
    const ProbeResult p = integer_valued_probe(mz.psi, 3);
    CHECK(p.attained);
    CHECK(p.witness.count() == 6);
    CHECK(mz.psi.eval(p.witness) == RatX(3));
    for (const auto& [x, v] : p.deletions) CHECK(v < RatX(3));
}

TEST_CASE("group metric: identity, symmetry, the worked example") {
    const Submeasure phi = minpath();
    const PointSet a = PointSet::of(3, {0}), b = PointSet::of(3, {1});
    CHECK(group_metric(phi, a, a) == RatX(0));
    CHECK(group_metric(phi, a, b) == RatX(1));
    CHECK(group_metric(phi, PointSet(3), PointSet::full(3)) == RatX(2));
    CHECK(group_metric(phi, a, b) == group_metric(phi, b, a));
}

TEST_CASE("group metric satisfies the triangle inequality on full sweeps") {
    const EdPair ed = gen_ed({2, 2});
    for (const Submeasure* phi : {&ed.chain, &ed.sup}) {
        const uint32_t n = phi->ground().size();
        for (uint64_t x = 0; x < (uint64_t(1) << n); ++x)
            for (uint64_t y = 0; y < (uint64_t(1) << n); ++y)
                for (uint64_t z = 0; z < (uint64_t(1) << n); ++z) {
                    const PointSet a = PointSet::from_mask(n, x), b = PointSet::from_mask(n, y),
                                   c = PointSet::from_mask(n, z);
                    CHECK(group_metric(*phi, a, c) <=
                          group_metric(*phi, a, b) + group_metric(*phi, b, c));
                }
    }
}

TEST_CASE("eval_table agrees with single evaluations") {
    SplitMix64 rng(23);
    const EdPair ed = gen_ed({3, 3});
    for (const Submeasure* phi : {&ed.chain, &ed.sup}) {
        const auto table = phi->eval_table(phi->ground().full_set());
        for (uint64_t m = 0; m < table.size(); ++m)
            CHECK(table[m] == phi->eval(PointSet::from_mask(6, m)));
    }
}
