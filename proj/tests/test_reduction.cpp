#include <doctest.h>

#include "sml/pathology.hpp"
#include "sml/reduction.hpp"
#include "sml/rng.hpp"
#include "sml/verify.hpp"
#include "sml/zoo.hpp"

using namespace sml;

TEST_CASE("pushforward basics: identity, constant, empty fibers") {
    const Submeasure phi = gen_minimal_pathological();
    const PointMap id = PointMap::identity(phi.ground());
    const Submeasure same = pushforward(phi, id);
    for (uint64_t m = 0; m < 8; ++m)
        CHECK(same.eval(PointSet::from_mask(3, m)) == phi.eval(PointSet::from_mask(3, m)));

    const PointMap constant(phi.ground(), Ground(2), {0, 0, 0});
    const Submeasure pushed = pushforward(phi, constant);
    CHECK(pushed.eval(PointSet::of(2, {0})) == RatX(2)); // full preimage
    CHECK(pushed.eval(PointSet::of(2, {1})) == RatX(0)); // empty fiber
    CHECK(pushed.eval(PointSet(2)) == RatX(0));
}

TEST_CASE("the image of a measure is a measure") {
    const Ground g(4);
    const Submeasure counting = Submeasure::sup({Measure::counting(g, PointSet::full(4))});
    const PointMap merge(g, Ground(3), {0, 0, 1, 2});
    const Submeasure pushed = pushforward(counting, merge);
    REQUIRE(pushed.kind() == ReprKind::SupMeasures);
    // additive on every pair of disjoint target sets
    for (uint64_t a = 0; a < 8; ++a)
        for (uint64_t b = 0; b < 8; ++b) {
            if (a & b) continue;
            CHECK(pushed.eval(PointSet::from_mask(3, a | b)) ==
                  pushed.eval(PointSet::from_mask(3, a)) + pushed.eval(PointSet::from_mask(3, b)));
        }
    CHECK(pushed.eval(PointSet::of(3, {0})) == RatX(2));
}

TEST_CASE("pushforwards stay submeasures") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const uint32_t ns = 3 + static_cast<uint32_t>(rng.below(5));
        const uint32_t nt = 2 + static_cast<uint32_t>(rng.below(4));
        const Submeasure phi = sml::verify_detail::random_submeasure(rng, ns);
        std::vector<uint32_t> f(ns);
        for (uint32_t p = 0; p < ns; ++p) f[p] = static_cast<uint32_t>(rng.below(nt));
        const Submeasure pushed = pushforward(phi, PointMap(phi.ground(), Ground(nt), std::move(f)));
        CHECK(check_axioms(pushed).pass());
    }
}

TEST_CASE("dominated measures push to dominated measures") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t ns = 3 + static_cast<uint32_t>(rng.below(4));
        const uint32_t nt = 2 + static_cast<uint32_t>(rng.below(3));
        const Submeasure phi = sml::verify_detail::random_submeasure(rng, ns);
        std::vector<uint32_t> fvec(ns);
        for (uint32_t p = 0; p < ns; ++p) fvec[p] = static_cast<uint32_t>(rng.below(nt));
        const PointMap f(phi.ground(), Ground(nt), std::move(fvec));
        const Submeasure pushed = pushforward(phi, f);
        // sample dominated measures from hat witnesses
        const PointSet a = sml::verify_detail::random_nonempty_subset(rng, ns);
        const Measure nu = hat(phi, a).witness;
        std::vector<Rat> w(nt, Rat(0));
        for (uint32_t p = 0; p < ns; ++p) w[f.map[p]] += nu.weight(p);
        const Measure nu_f(Ground(nt), std::move(w));
        for (uint64_t m = 0; m < (uint64_t(1) << nt); ++m) {
            const PointSet t = PointSet::from_mask(nt, m);
            CHECK(RatX(nu_f.mass(t)) <= pushed.eval(t));
        }
    }
}

TEST_CASE("hat of a pushforward dominates the pushed hat") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t ns = 3 + static_cast<uint32_t>(rng.below(4));
        const uint32_t nt = 2 + static_cast<uint32_t>(rng.below(3));
        const Submeasure phi = sml::verify_detail::random_submeasure(rng, ns);
        std::vector<uint32_t> fvec(ns);
        for (uint32_t p = 0; p < ns; ++p) fvec[p] = static_cast<uint32_t>(rng.below(nt));
        const PointMap f(phi.ground(), Ground(nt), std::move(fvec));
        const Submeasure pushed = pushforward(phi, f);
        for (uint64_t m = 0; m < (uint64_t(1) << nt); ++m) {
            const PointSet a = PointSet::from_mask(nt, m);
            CHECK(hat(pushed, a).value >= hat(phi, f.preimage(a)).value);
        }
    }
}

TEST_CASE("degree monotonicity under pushforward") {
    const Submeasure phi = gen_minimal_pathological();
    const PointMap merge(phi.ground(), Ground(2), {0, 0, 1});
    const MonotonicityCheck check = pathology_monotonicity_check(phi, merge);
    CHECK(check.comparable);
    CHECK(check.holds);
    CHECK(check.pushed.degree <= RatX(Rat(4, 3)));

    const MonotonicityCheck same = pathology_monotonicity_check(phi, PointMap::identity(phi.ground()));
    CHECK(same.holds);
    CHECK(same.pushed.degree == same.source.degree);

    // nonpathological sources push to nonpathological images
    const Ground g(4);
    const Submeasure sup = Submeasure::sup({Measure(g, {Rat(1), Rat(1, 2), Rat(1, 3), Rat(2)})});
    const MonotonicityCheck np = pathology_monotonicity_check(sup, PointMap(g, Ground(2), {0, 1, 0, 1}));
    CHECK(np.source.degree == RatX(1));
    CHECK(np.pushed.degree == RatX(1));
}

TEST_CASE("the explicit reduction map lands where the construction says") {
    const SoleckiReduction red = solecki_reduction_map(1);
    CHECK(red.f.source.size() == 12);
    CHECK(red.f.target.size() == 6);
    // the first injective function is (0,1), the whole-ground index 1
    CHECK(red.x_points[0] == 1);
    CHECK(red.mazur.ground.label(red.x_points[0]) == "01");
    // its image drops cylinders 0 and 1, keeping {10, 11}: mask 0b1100
    CHECK(red.solecki.masks[red.f.map[0]] == 0b1100);
    // every image keeps exactly half of the cylinders
    for (uint32_t r = 0; r < red.f.source.size(); ++r)
        CHECK(__builtin_popcount(red.solecki.masks[red.f.map[r]]) == 2);
    CHECK_THROWS_AS(solecki_reduction_map(3), SizeGuard);
}

TEST_CASE("finite verification of the reduction, levels 1 and 2") {
    const ReductionReport r1 = verify_solecki_reduction(1);
    CHECK(r1.all_pass);
    CHECK(r1.rows.size() == 4 + 2 + 1); // fibers, two backward depths, positivity

    const ReductionReport r2 = verify_solecki_reduction(2);
    CHECK(r2.all_pass);
    CHECK(r2.rows.size() == 8 + 2 + 1);
}
