#include <doctest.h>

#include "mmph/catalog.hpp"
#include "mmph/errors.hpp"
#include "mmph/mmp_codec.hpp"
#include "support.hpp"

using namespace mmph;

TEST_CASE("alphabet") {
    CHECK(mmp_alphabet().size() == 88);
    CHECK(mmp_alphabet().substr(0, 10) == "123456789A");
    CHECK(mmp_alphabet()[61] == '!');
    CHECK(mmp_alphabet()[69] == ')');
    for (char c : std::string_view(",.={}")) CHECK_FALSE(alphabet_index(c));
    CHECK(*alphabet_index('a') == 35);
    CHECK(vertex_symbol(88) == "#89");
}

TEST_CASE("parse simple hypergraphs") {
    auto h = parse_mmph("123,345,561.");
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 3);
    CHECK(h.dimension() == 3);
    CHECK(serialize_mmph(h) == "123,345,561.");
    CHECK(parse_mmph(" 12 ,\n23 , 31 .\n").edge_count() == 3);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_mmph("12,2."), ParseError);
    CHECK_THROWS_AS(parse_mmph("121."), ParseError);
    CHECK_THROWS_AS(parse_mmph("12,21."), ParseError);
    CHECK_THROWS_AS(parse_mmph("12,23"), ParseError);
    CHECK_THROWS_AS(parse_mmph("12,2{."), ParseError);
    CHECK_THROWS_AS(parse_mmph("12. 34."), ParseError);
    CHECK_THROWS_AS(parse_mmph(""), ParseError);
}

TEST_CASE("batch files") {
    auto all = parse_mmph_batch("12,23,31.\n1234,4567.\n");
    REQUIRE(all.size() == 2);
    CHECK(all[1].dimension() == 4);
}

TEST_CASE("serialization relabels non-symbol names contiguously") {
    auto h = Mmph::from_named_edges({{"x1", "x2"}, {"x2", "x3"}});
    CHECK(serialize_mmph(h) == "12,23.");
    auto p = parse_mmph("AB,BC.");
    CHECK(serialize_mmph(p) == "AB,BC.");
    CHECK(serialize_mmph(p, Relabel::Contiguous) == "12,23.");
}

TEST_CASE("random round trips") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto h = testing::random_mmph(rng, 2 + testing::below(rng, 60), 1 + testing::below(rng, 40), 4);
        auto text = serialize_mmph(h);
        auto back = parse_mmph(text);
        CHECK(serialize_mmph(back) == text);
        REQUIRE(back.edge_count() == h.edge_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e) CHECK(back.edge_names(e) == h.edge_names(e));
    }
}

TEST_CASE("embedded 69-50 round-trips byte for byte") {
    auto h = parse_mmph(embedded_69_50_text());
    CHECK(serialize_mmph(h) == embedded_69_50_text());
    auto parsed = parse_coordinatization(embedded_69_50_coordinates(), h);
    CHECK(parsed.uncoordinatized.empty());
    CHECK(parsed.coords.size() == 69);
    CHECK(parsed.coords.ring() == Ring::Eisenstein);
    auto again = parse_coordinatization(serialize_coordinatization(h, parsed.coords), h);
    CHECK(again.coords == parsed.coords);
}

TEST_CASE("coordinatization errors") {
    auto h = parse_mmph("12,23.");
    CHECK_THROWS_AS(parse_coordinatization("1={1,0} 1={0,1}", h), ParseError);
    CHECK_THROWS_AS(parse_coordinatization("4={1,0}", h), ParseError);
    CHECK_THROWS_AS(parse_coordinatization("1={1,0,0}", h), ParseError);
    CHECK_THROWS_AS(parse_coordinatization("1={0,0}", h), ParseError);
    CHECK_THROWS_AS(parse_coordinatization("1={1,r2} 2={1,w}", h), ParseError);
    auto partial = parse_coordinatization("1={1,0}", h);
    CHECK(partial.uncoordinatized == std::vector<std::string>{"2", "3"});
}

TEST_CASE("documents with coordinates") {
    auto doc = parse_document("12,23.\n1={1,0} 2={0,1} 3={1,0}\n");
    CHECK(doc.mmph.edge_count() == 2);
    REQUIRE(doc.coords);
    CHECK(doc.coords->size() == 3);
    auto bare = parse_document("12,23.\n");
    CHECK_FALSE(bare.coords);
}
