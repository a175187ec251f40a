#include <doctest.h>

#include "sml/io.hpp"
#include "sml/zoo.hpp"

using namespace sml;

namespace {

template <typename T, typename ToJson, typename FromJson>
void check_byte_stable(const T& value, ToJson&& to, FromJson&& from) {
    const std::string once = to(value).dump(2);
    const std::string twice = to(from(Json::parse(once))).dump(2);
    CHECK(once == twice);
}

} // namespace

TEST_CASE("submeasure files round-trip byte-identically, all four kinds") {
    auto to = [](const Submeasure& s) { return submeasure_to_json(s); };
    auto from = [](const Json& j) { return submeasure_from_json(j); };
    check_byte_stable(gen_minimal_pathological(), to, from);
    check_byte_stable(gen_edfin(2).psi, to, from);
    check_byte_stable(gen_mazur(2).psi, to, from);
    check_byte_stable(gen_ed({3, 3}).chain, to, from);
    check_byte_stable(gen_solecki(2).chi, to, from);

    // values survive the trip
    const Submeasure phi = gen_minimal_pathological();
    const Submeasure back = submeasure_from_json(submeasure_to_json(phi));
    CHECK(back.eval_table(PointSet::full(3)) == phi.eval_table(PointSet::full(3)));
}

TEST_CASE("covering, matrix, coloring and map files round-trip") {
    check_byte_stable(gen_mazur(2).cover, [](const CoveringInstance& c) { return covering_to_json(c); },
                      [](const Json& j) { return covering_from_json(j); });
    check_byte_stable(gen_fin_times_empty({2, 3}),
                      [](const VectorSequence& m) { return matrix_to_json(m); },
                      [](const Json& j) { return matrix_from_json(j); });
    check_byte_stable(sierpinski_coloring(12),
                      [](const PairColoring& c) { return coloring_to_json(c); },
                      [](const Json& j) { return coloring_from_json(j); });
    const PointMap f(Ground(3), Ground(2), {0, 1, 0});
    check_byte_stable(f, [](const PointMap& m) { return map_to_json(m); },
                      [](const Json& j) { return map_from_json(j); });
}

TEST_CASE("rationals parse in both spellings, sets are sorted arrays") {
    const Json j = Json::parse(R"({"ground": 2, "repr": {"kind": "table",
        "values": [[[], "0"], [[0], "1/2"], [[1], "2/4"], [[0,1], "1"]]}})");
    const Submeasure phi = submeasure_from_json(j);
    CHECK(phi.eval(PointSet::of(2, {1})) == RatX(Rat(1, 2)));
    // serialization canonicalizes: lowest terms, explicit denominator
    const std::string text = submeasure_to_json(phi).dump();
    CHECK(text.find("\"1/2\"") != std::string::npos);
    CHECK(text.find("\"2/4\"") == std::string::npos);
}

TEST_CASE("parse errors name the offending field") {
    auto message_of = [](const char* text) {
        try {
            submeasure_from_json(Json::parse(text));
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of(R"({"repr": {"kind": "table", "values": []}})").find("ground") != std::string::npos);
    CHECK(message_of(R"({"ground": 2})").find("repr") != std::string::npos);
    CHECK(message_of(R"({"ground": 2, "repr": {"kind": "nope"}})").find("kind") != std::string::npos);
    CHECK(message_of(R"({"ground": 2, "repr": {"kind": "min_cover", "family": [[7]]}})")
              .find("family") != std::string::npos);
    CHECK(message_of(R"({"ground": 2, "repr": {"kind": "sup_measures", "measures": [["1/1"]]}})")
              .find("measures") != std::string::npos);
}

TEST_CASE("labels survive and are validated") {
    const Json j = submeasure_to_json(gen_mazur(2).psi);
    CHECK(j.contains("labels"));
    const Submeasure back = submeasure_from_json(j);
    CHECK(back.ground().label(0) == "00");
    CHECK_THROWS_AS(ground_from_json(Json::parse(R"({"ground": 2, "labels": ["a","a"]})")),
                    ParseError);
}

TEST_CASE("chain arity spellings") {
    const Json level = Json::parse(
        R"({"ground": 3, "repr": {"kind": "mazur_chain", "level1": [[0,1]], "arity": "n"}})");
    CHECK(submeasure_from_json(level).chain_repr().arity.is_level());
    const Json constant = Json::parse(
        R"({"ground": 3, "repr": {"kind": "mazur_chain", "level1": [[0,1]], "arity": 3}})");
    CHECK(submeasure_from_json(constant).chain_repr().arity.constant_value() == 3);
    CHECK_THROWS_AS(submeasure_from_json(Json::parse(
                        R"({"ground": 3, "repr": {"kind": "mazur_chain", "level1": [], "arity": "x"}})")),
                    ParseError);
}

TEST_CASE("hash helpers are stable") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
    CHECK(fnv1a64("a") != fnv1a64("b"));
}

TEST_CASE("barrier colorings serialize by reference") {
    const Json j = barrier_to_json(3, "matrix.json");
    CHECK(j["p"] == 3);
    CHECK(j["matrix_ref"] == "matrix.json");
}
