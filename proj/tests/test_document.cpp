#include <catch2/catch_amalgamated.hpp>

#include "finmeas/document.hpp"
#include "finmeas/generate.hpp"

using namespace finmeas;

namespace {

const char* kLabeledDoc = R"({"format_version":1,
  "space":{"kind":"finite_labeled","labels":["a","b"]},
  "atoms":[{"point":"b","weight":"-3"},{"point":"a","weight":"1/2"},{"point":"a","weight":"1/2"}]})";

} // namespace

TEST_CASE("documents parse into canonical measures") {
    const SignedMeasure mu = parse_measure_document(kLabeledDoc);
    CHECK(mu.space() == Space::finite_labeled({"a", "b"}));
    REQUIRE(mu.atoms().size() == 2);
    CHECK(mu.eval({Point::label("a")}) == Rat(1));
    CHECK(mu.eval({Point::label("b")}) == Rat(-3));
}

TEST_CASE("serialization round-trips bit-exactly on random measures") {
    Rng rng{139};
    for (const Space& space :
         {Space::finite_labeled({"a", "b", "c"}), Space::integer_line(), Space::rational_vector(2),
          Space::measure_space(Space::integer_line()),
          Space::measure_space(Space::measure_space(Space::finite_labeled({"x", "y"})))}) {
        for (int i = 0; i < 60; ++i) {
            const SignedMeasure mu = gen_measure(rng, space);
            const std::string text = serialize_measure_document(mu);
            const SignedMeasure back = parse_measure_document(text);
            CHECK(back == mu);
            CHECK(serialize_measure_document(back) == text);
        }
    }
}

TEST_CASE("integer points accept both JSON numbers and strings") {
    const SignedMeasure a = parse_measure_document(
        R"({"format_version":1,"space":{"kind":"integer_line"},"atoms":[{"point":-4,"weight":"1"}]})");
    const SignedMeasure b = parse_measure_document(
        R"({"format_version":1,"space":{"kind":"integer_line"},"atoms":[{"point":"-4","weight":"1"}]})");
    CHECK(a == b);
}

TEST_CASE("unknown versions and missing fields are parse errors") {
    CHECK_THROWS_AS(parse_measure_document(
                        R"({"format_version":2,"space":{"kind":"integer_line"},"atoms":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_measure_document(R"({"space":{"kind":"integer_line"},"atoms":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_measure_document(
                        R"({"format_version":1,"space":{"kind":"integer_line"}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_measure_document(
                        R"({"format_version":1,"space":{"kind":"nowhere"},"atoms":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_measure_document("{"), ParseError);
    CHECK_THROWS_AS(parse_measure_document(""), ParseError);
}

TEST_CASE("malformed weights and foreign points keep their own error kinds") {
    CHECK_THROWS_AS(parse_measure_document(
                        R"({"format_version":1,"space":{"kind":"integer_line"},"atoms":[{"point":0,"weight":"1/0"}]})"),
                    MalformedRational);
    CHECK_THROWS_AS(
        parse_measure_document(
            R"({"format_version":1,"space":{"kind":"rational_vector","dimension":2},"atoms":[{"point":["1"],"weight":"1"}]})"),
        KindMismatch);
    CHECK_THROWS_AS(
        parse_measure_document(
            R"({"format_version":1,"space":{"kind":"finite_labeled","labels":["a"]},"atoms":[{"point":"z","weight":"1"}]})"),
        KindMismatch);
}

TEST_CASE("parse errors carry position information from the reader") {
    try {
        parse_measure_document("{\"format_version\":1,\n  broken");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("line") != std::string::npos);
    }
}

TEST_CASE("nested measures serialize through the measure point form") {
    const Space labels = Space::finite_labeled({"a"});
    const Space mx = Space::measure_space(labels);
    const SignedMeasure inner =
        SignedMeasure::from_atoms(labels, {{Point::label("a"), make_rational(2, 7)}});
    const SignedMeasure mm =
        SignedMeasure::from_atoms(mx, {{Point::measure(inner), Rat(-3)}});
    const std::string text = serialize_measure_document(mm);
    CHECK(text.find("\"atoms\"") != std::string::npos);
    CHECK(parse_measure_document(text) == mm);
}

TEST_CASE("subspace carriers have no document form") {
    const Space line = Space::integer_line();
    const SignedMeasure mu = dirac(line, Point::integer(0));
    const SignedMeasure restricted = restrict_measure(mu, BoundedSet::integer_interval(line, 1));
    CHECK_THROWS_AS(serialize_measure_document(restricted), InvalidArgument);
}
