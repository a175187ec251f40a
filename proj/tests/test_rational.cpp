#include <doctest.h>

#include "sml/rational.hpp"
#include "sml/rng.hpp"

using namespace sml;

TEST_CASE("rationals are canonical and exact") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
    CHECK((Rat(7, 2) / Rat(7)) == Rat(1, 2));
    CHECK(Rat(0).is_zero());
    CHECK(Rat(5).is_integer());
    CHECK_FALSE(Rat(5, 3).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), ParseError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("rational formatting always carries the denominator") {
    CHECK(Rat(5).str() == "5/1");
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK(Rat::from_string("4/6") == Rat(2, 3));
    CHECK(Rat::from_string("7") == Rat(7));
    CHECK(Rat::from_string("-7/2").str() == "-7/2");
    CHECK_THROWS_AS(Rat::from_string("x"), ParseError);
    CHECK_THROWS_AS(Rat::from_string("1/0"), ParseError);
}

TEST_CASE("infinity absorbs addition and dominates comparison") {
    const RatX inf = RatX::inf();
    CHECK(inf.is_inf());
    CHECK((inf + RatX(3)).is_inf());
    CHECK((RatX(3) + inf).is_inf());
    CHECK(RatX(3) < inf);
    CHECK_FALSE(inf < RatX(3));
    CHECK(inf == RatX::inf());
    CHECK(inf.str() == "inf");
    CHECK(RatX::from_string("inf").is_inf());
    CHECK(RatX::from_string("3/4") == RatX(Rat(3, 4)));
    CHECK_THROWS_AS(inf.finite(), Error);
}

TEST_CASE("pow2 covers both signs") {
    CHECK(pow2(0) == Rat(1));
    CHECK(pow2(5) == Rat(32));
    CHECK(pow2(-3) == Rat(1, 8));
}

TEST_CASE("field laws on random rationals") {
    SplitMix64 rng(42);
    for (int i = 0; i < 500; ++i) {
        auto pick = [&] {
            long num = static_cast<long>(rng.below(41)) - 20;
            long den = static_cast<long>(rng.below(12)) + 1;
            return Rat(num, den);
        };
        const Rat a = pick(), b = pick(), c = pick();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("splitmix is deterministic and splittable") {
    SplitMix64 a(7), b(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    SplitMix64 root(7);
    CHECK(root.split(0).next() != root.split(1).next());
    // deterministic across calls
    CHECK(root.split(3).next() == root.split(3).next());
}
