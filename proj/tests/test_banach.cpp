#include <doctest.h>

#include "sml/banach.hpp"
#include "sml/coloring.hpp"
#include "sml/pathology.hpp"
#include "sml/rng.hpp"
#include "sml/zoo.hpp"

using namespace sml;

TEST_CASE("the submeasure of a sequence is the sup of its row measures") {
    VectorSequence x(2, 2, false);
    x.at(0, 0) = Rat(1);
    x.at(1, 0) = Rat(0);
    x.at(0, 1) = Rat(1, 2);
    x.at(1, 1) = Rat(1, 2);
    const Submeasure phi = phi_of_sequence(x);
    CHECK(phi.eval(PointSet::full(2)) == RatX(Rat(3, 2)));
    CHECK(phi.eval(PointSet(2)) == RatX(0));

    VectorSequence neg(1, 1, true);
    neg.at(0, 0) = Rat(-1);
    CHECK_THROWS_AS(phi_of_sequence(neg), SignedInput);
}

TEST_CASE("column norms are singleton values") {
    const VectorSequence x = gen_fin_times_empty({2, 3});
    const Submeasure phi = phi_of_sequence(x);
    for (uint32_t n = 0; n < x.cols(); ++n) {
        PointSet s(x.cols());
        s.add(n);
        CHECK(RatX(x.column_norm(n)) == phi.eval(s));
    }
    // the finite block instance has unit columns
    const VectorSequence ef = sequence_of_phi(gen_edfin(2).psi);
    for (uint32_t n = 0; n < ef.cols(); ++n) CHECK(ef.column_norm(n) == Rat(1));
}

TEST_CASE("block matrices weigh sets by their block index") {
    const VectorSequence x = gen_fin_times_empty({2, 3, 4});
    const Submeasure phi = phi_of_sequence(x);
    // inside the m-th block every nonempty set weighs m
    CHECK(phi.eval(PointSet::of(9, {0, 1})) == RatX(1));
    CHECK(phi.eval(PointSet::of(9, {2, 4})) == RatX(2));
    CHECK(phi.eval(PointSet::of(9, {5, 6, 7, 8})) == RatX(3));
    // a selector through the blocks weighs the largest block index it meets
    CHECK(phi.eval(PointSet::of(9, {0, 2, 5})) == RatX(3));
    CHECK(phi.eval(PointSet(9)) == RatX(0));
}

TEST_CASE("round trip between sequences and sup submeasures is exact") {
    const Ground g(2);
    const Submeasure one = Submeasure::sup({Measure::counting(g, PointSet::full(2))});
    const VectorSequence m = sequence_of_phi(one);
    CHECK(m.rows() == 1);
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(m.at(0, 1) == Rat(1));

    SplitMix64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(6));
        const uint32_t k = 1 + static_cast<uint32_t>(rng.below(4));
        std::vector<Measure> ms;
        Ground gg(n);
        for (uint32_t r = 0; r < k; ++r) {
            std::vector<Rat> w(n);
            for (uint32_t p = 0; p < n; ++p) w[p] = random_rat01(rng, 8);
            ms.emplace_back(gg, std::move(w));
        }
        const Submeasure phi = Submeasure::sup(std::move(ms));
        const Submeasure back = phi_of_sequence(sequence_of_phi(phi));
        CHECK(phi.eval_table(PointSet::full(n)) == back.eval_table(PointSet::full(n)));
    }

    const Ground g3(3);
    const Submeasure chain = mazur_from_chain(g3, {});
    CHECK_THROWS_AS(sequence_of_phi(chain), ReprMismatch);
}

TEST_CASE("sequences of sups are nonpathological") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(4));
        VectorSequence x(1 + static_cast<uint32_t>(rng.below(3)), n, false);
        bool positive = false;
        for (uint32_t k = 0; k < x.rows(); ++k)
            for (uint32_t p = 0; p < n; ++p) {
                x.at(k, p) = random_rat01(rng, 6);
                positive = positive || !x.at(k, p).is_zero();
            }
        if (!positive) x.at(0, 0) = Rat(1);
        const PathologyReport rep = pathology_degree(phi_of_sequence(x), DegreeScope::AllSubsets);
        CHECK(rep.degree == RatX(1));
    }
}

TEST_CASE("absolute-value normalization") {
    VectorSequence x(4, 1, true);
    x.at(0, 0) = Rat(1);
    x.at(1, 0) = Rat(-1);
    x.at(2, 0) = Rat(1);
    x.at(3, 0) = Rat(-1, 2);
    const VectorSequence y = abs_normalize(x);
    CHECK(y.at(1, 0) == Rat(1));
    CHECK(y.at(3, 0) == Rat(1, 2));
    CHECK_FALSE(y.signed_allowed());
    CHECK(abs_normalize(y) == y);
}

TEST_CASE("boundedness report: sign selection is exact per row") {
    VectorSequence ones(1, 6, false);
    for (uint32_t n = 0; n < 6; ++n) ones.at(0, n) = Rat(1);
    const BoundednessReport all = boundedness_report(ones, PointSet::full(6), Rat(6));
    CHECK(all.primal_max == Rat(6));
    CHECK(all.bounded_at_k);

    VectorSequence alt(1, 7, true);
    for (uint32_t n = 0; n < 7; ++n) alt.at(0, n) = (n % 2 == 0) ? Rat(1) : Rat(-1);
    const BoundednessReport rep = boundedness_report(alt, PointSet::full(7), Rat(3));
    CHECK(rep.primal_max == Rat(4)); // positive entries only
    CHECK_FALSE(rep.bounded_at_k);
    CHECK(rep.dual_sums[0] == Rat(7));

    // after normalization the primal max equals the absolute row sum
    const BoundednessReport norm = boundedness_report(abs_normalize(alt), PointSet::full(7), Rat(7));
    CHECK(norm.primal_max == rep.dual_sums[0]);

    const VectorSequence fx = gen_fin_times_empty({2, 3, 4});
    const PointSet block3 = PointSet::of(9, {5, 6, 7, 8});
    CHECK(boundedness_report(fx, block3, Rat(3)).bounded_at_k);
    CHECK_FALSE(boundedness_report(fx, block3, Rat(2)).bounded_at_k);
}

TEST_CASE("nullity diagnostics report truncation trends only") {
    // entries 2^-k in every column: the rows vanish with the row index
    VectorSequence rows(8, 3, false);
    for (uint32_t k = 0; k < 8; ++k)
        for (uint32_t n = 0; n < 3; ++n) rows.at(k, n) = pow2(-static_cast<long>(k));
    const NullityReport r1 = nullity_diagnostics(rows, 6);
    CHECK(r1.label.find("truncation") != std::string::npos);
    CHECK(r1.row_vanishing[0] == -1); // nothing exceeds 1
    for (uint32_t t = 1; t <= 6; ++t)
        CHECK(r1.row_vanishing[t] == static_cast<int64_t>(t) - 1);
    CHECK(r1.sup_col_norm == Rat(1));

    // growing blocks: the singleton values do not vanish along the columns
    const NullityReport r2 = nullity_diagnostics(gen_fin_times_empty({2, 3, 4}), 4);
    CHECK(r2.sup_col_norm == Rat(3));
    CHECK(r2.col_vanishing[0] == 8); // entries above 1 up to the last column

    // diagonal 2^-n: the columns vanish and the supremum is 1
    VectorSequence diag(6, 6, false);
    for (uint32_t n = 0; n < 6; ++n) diag.at(n, n) = pow2(-static_cast<long>(n));
    const NullityReport r3 = nullity_diagnostics(diag, 4);
    CHECK(r3.sup_col_norm == Rat(1));
    for (uint32_t t = 1; t <= 4; ++t)
        CHECK(r3.col_vanishing[t] == static_cast<int64_t>(t) - 1);
}

TEST_CASE("scaling to the unit cube") {
    const VectorSequence fx = gen_fin_times_empty({2, 2});
    const VectorSequence unit = scale_to_unit(fx);
    CHECK(sup_column_norm(unit) == Rat(1));
    CHECK(unit.at(0, 0) == Rat(1, 2));
    CHECK_THROWS_AS(scale_to_unit(VectorSequence(2, 2, false)), ParseError);
}

TEST_CASE("tall-characterization wiring at finite scale") {
    // a type-c0, weakly-null truncation: entries 2^-(n+k), scaled to the
    // unit cube, rounded to finitely many levels
    VectorSequence x(5, 9, false);
    for (uint32_t k = 0; k < 5; ++k)
        for (uint32_t n = 0; n < 9; ++n) x.at(k, n) = pow2(-static_cast<long>(n + k));
    const VectorSequence unit = scale_to_unit(x);
    const VectorSequence rounded = dyadic_round(unit);
    const PartitionSystem ps = level_partition(rounded);
    const PairColoring c = c0tall_coloring(ps);

    // every 1-homogeneous set found obeys the mass bound
    for (uint32_t s = 1; s <= 9; ++s) {
        const auto h = find_homogeneous(c, 1, s);
        if (!h) break;
        CHECK(verify_color1_bound(ps, *h).within);
    }

    // per point, a tail where the pair color settles to 1 (strictly higher
    // levels or vanishing at far points) exists inside the truncation
    for (uint32_t n = 0; n + 1 < 9; ++n) {
        uint32_t m = n + 1;
        while (m < 9) {
            bool tail = true;
            for (uint32_t l = m; l < 9; ++l)
                if (c.color(n, l) != 1) tail = false;
            if (tail) break;
            ++m;
        }
        CHECK(m < 9);
    }
}
