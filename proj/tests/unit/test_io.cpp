#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "random.hpp"

#include "legch/io.hpp"

using namespace legch;
using namespace legch::testing;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        parse_knot_file(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("parse succeeded: " << text);
    return ErrorCode::usage;
}

std::string one_generator(const std::string& differential, const std::string& extra = "") {
    return R"({"generators": [{"name": "q", "grading": 1}], "differential": {"q": )" + differential +
           R"(}, "patches": [[{"name": "q", "coeff": 1}]])" + extra + "}";
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("shipped unknot") {
    const KnotData k = load_corpus("unknot.json");
    CHECK(k.dga == unknot_dga());
    CHECK(k.diagram.patches().size() == 2);
    REQUIRE(k.heights);
    CHECK(k.heights->at(0) == 1);
    CHECK(k.diagram.ng_resolved());
}

TEST_CASE("shipped trefoil") {
    const KnotData k = load_corpus("trefoil.json");
    CHECK(k.dga == trefoil_dga());
    CHECK(*k.heights == trefoil_heights());
    CHECK(k.diagram.patches().size() == 6);
}

TEST_CASE("decimal heights are exact") {
    const KnotData k = load_corpus("trefoil_rii.json");
    CHECK(k.heights->at(*k.dga.find("a")) == Rational(23, 10));
    CHECK(k.heights->at(*k.dga.find("b")) == 2);
}

TEST_CASE("unit word and cancellation") {
    CHECK(parse_knot_file(one_generator("[[]]")).dga.differential(0) == Element::unit());
    CHECK(parse_knot_file(one_generator("[[], []]")).dga.differential(0).is_zero());
}

TEST_CASE("error codes") {
    CHECK(code_of(one_generator(R"([["q"]])")) == ErrorCode::grading_violation);
    CHECK(code_of("{\"generators\": [") == ErrorCode::malformed_json);
    CHECK(code_of(one_generator(R"([["p"]])")) == ErrorCode::unknown_generator);
    CHECK(code_of(one_generator("[]", R"(, "heights": {"q": 0})")) == ErrorCode::invalid_height);
    CHECK(code_of(one_generator("[]", R"(, "extra": 1)")) == ErrorCode::schema_violation);
    CHECK(code_of(R"({"generators": [{"name": "q", "grading": 1}], "differential": {}, "patches": []})") ==
          ErrorCode::schema_violation);
    CHECK(code_of(R"({"generators": [{"name": "q", "grading": 1}, {"name": "q", "grading": 0}],
                      "differential": {"q": []}, "patches": []})") == ErrorCode::duplicate_generator);
    // d(a) = b, d(b) = 1
    CHECK(code_of(R"({"generators": [{"name": "a", "grading": 2}, {"name": "b", "grading": 1}],
                      "differential": {"a": [["b"]], "b": [[]]}, "patches": []})") == ErrorCode::nonzero_square);
    CHECK(code_of(one_generator("[]").replace(one_generator("[]").find("\"coeff\": 1"), 10, "\"coeff\": 5")) ==
          ErrorCode::invalid_patch);
}

TEST_CASE("malformed JSON names the line") {
    try {
        parse_knot_file("{\n  \"generators\": [\n  ,\n}");
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("knot files round-trip") {
    for (const char* name : {"unknot.json", "trefoil.json", "trefoil_rii.json", "island.json"}) {
        const KnotData k = load_corpus(name);
        const std::string text = serialize_knot_file(k);
        const KnotData again = parse_knot_file(text);
        CHECK(again.dga == k.dga);
        CHECK(again.diagram == k.diagram);
        CHECK(again.heights == k.heights);
        CHECK(again.meta == k.meta);
        CHECK(serialize_knot_file(again) == text);
    }
}

TEST_CASE("barcode files") {
    const Barcode b = parse_barcode_file(
        R"({"bars": [{"degree": 0, "birth": 2, "death": 2.3, "birth_label": "q4+b"}, {"degree": 1, "birth": "1/3", "death": "inf"}]})");
    REQUIRE(b.bars.size() == 2);
    CHECK(*b.bars[0].death == Rational(23, 10));
    CHECK(b.bars[1].birth == Rational(1, 3));
    CHECK(b.bars[1].is_infinite());
    const std::string text = serialize_barcode_file(b);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(text.find("2.3") != std::string::npos);
    CHECK_THROWS_AS(parse_barcode_file(R"({"bars": [{"degree": 0, "birth": 2, "death": 2}]})"), Error);
    CHECK_THROWS_AS(parse_barcode_file(R"({"bars": [{"degree": 0, "birth": 2}]})"), Error);
}

TEST_CASE("leading zeros are decimal") {
    CHECK(parse_rational("0.75") == Rational(3, 4));
    CHECK(parse_rational("0.625") == Rational(5, 8));
    CHECK(parse_rational("010/3") == Rational(10, 3));
    CHECK(parse_rational("-0.08") == Rational(-2, 25));
    CHECK(rational_from_decimal_double(0.75) == Rational(3, 4));
    const Barcode b = parse_barcode_file(R"({"bars": [{"degree": 0, "birth": 0.75, "death": "0.875"}]})");
    CHECK(b.bars[0].birth == Rational(3, 4));
    CHECK(*b.bars[0].death == Rational(7, 8));
}

TEST_CASE("property: barcode files round-trip") {
    Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        Barcode b = random_barcode(rng);
        for (Bar& x : b.bars) {
            if (rng.coin()) {
                // shift the whole bar so birth < death still holds
                const Rational shift(1, rng.uniform(3, 9));
                x.birth += shift;
                if (x.death) {
                    *x.death += shift;
                }
            }
            if (rng.coin()) {
                x.birth_label = "x" + std::to_string(rng.uniform(0, 9));
            }
        }
        const Barcode again = parse_barcode_file(serialize_barcode_file(b));
        const Barcode expected = b.canonical();
        REQUIRE(again.bars.size() == expected.bars.size());
        for (std::size_t i = 0; i < again.bars.size(); ++i) {
            CHECK(again.bars[i].degree == expected.bars[i].degree);
            CHECK(again.bars[i].birth == expected.bars[i].birth);
            CHECK(again.bars[i].death == expected.bars[i].death);
            CHECK(again.bars[i].birth_label == expected.bars[i].birth_label);
        }
    }
}

TEST_CASE("property: random knot files round-trip") {
    Rng rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        const RandomComplex c = random_nonlinear(rng, 6);
        KnotData k;
        k.dga = c.dga;
        std::vector<GeneratorId> crossings;
        std::vector<AreaPatch> patches;
        for (const Generator& g : c.dga.generators()) {
            crossings.push_back(g.id);
            patches.push_back(AreaPatch{{{g.id, rng.coin() ? 1 : -2}}});
        }
        k.diagram = LagrangianDiagramData(crossings, patches, rng.coin());
        k.heights = c.heights;
        const KnotData again = parse_knot_file(serialize_knot_file(k));
        CHECK(again.dga == k.dga);
        CHECK(again.diagram == k.diagram);
        CHECK(again.heights == k.heights);
    }
}

TEST_CASE("text rendering") {
    const Barcode unknot = corpus_barcode(load_corpus("unknot.json"));
    const std::string text = render_barcode(unknot, RenderFormat::text);
    CHECK(text == "barcode: 1 bar\nH1  [1, inf)  q\n");

    const Barcode trefoil = corpus_barcode(load_corpus("trefoil.json"));
    const std::string t = render_barcode(trefoil, RenderFormat::text);
    CHECK(t ==
          "barcode: 4 bars\n"
          "H0  [1, 4)  q3+q5  killed by q1\n"
          "H0  [1, inf)  q3\n"
          "H0  [1, inf)  q4\n"
          "H1  [4, inf)  q1+q2\n");

    CHECK(render_barcode(Barcode(), RenderFormat::text) == "barcode: 0 bars\n");
    const std::string colored = render_barcode(unknot, RenderFormat::text, true);
    CHECK(colored.find("\x1b[") != std::string::npos);
}

TEST_CASE("svg rendering") {
    const Barcode trefoil = corpus_barcode(load_corpus("trefoil.json"));
    const std::string svg = render_barcode(trefoil, RenderFormat::svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("marker-end=\"url(#arrow)\"") != std::string::npos);
    CHECK(svg.find(">H0<") != std::string::npos);
    CHECK(svg.find(">H1<") != std::string::npos);
    CHECK(svg == render_barcode(trefoil, RenderFormat::svg));
    CHECK(render_barcode(Barcode(), RenderFormat::svg).find("</svg>") != std::string::npos);
}

}
