#include <doctest.h>

#include "mmph/errors.hpp"
#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

using namespace mmph;

TEST_CASE("validation") {
    CHECK_THROWS_AS(Mmph({{0}}, {"1"}), InvalidHypergraph);
    CHECK_THROWS_AS(Mmph({{0, 0}}, {"1"}), InvalidHypergraph);
    CHECK_THROWS_AS(Mmph({{0, 1}, {1, 0}}, {"1", "2"}), InvalidHypergraph);
    CHECK_THROWS_AS(Mmph({{0, 1}}, {"1", "2", "3"}), InvalidHypergraph);
    CHECK_THROWS_AS(Mmph({{0, 1}}, {"1", "1"}), InvalidHypergraph);
    CHECK_NOTHROW(Mmph({{0, 1}}, {"1", "2"}));
}

TEST_CASE("stats") {
    auto h = parse_mmph("123,345,56,61.");
    auto s = stats(h);
    CHECK(s.k == 6);
    CHECK(s.l == 4);
    CHECK(s.n == 3);
    CHECK(s.kappa_histogram == std::map<std::size_t, std::size_t>{{2, 2}, {3, 2}});
    CHECK(s.multiplicity_histogram == std::map<std::size_t, std::size_t>{{1, 2}, {2, 4}});
    CHECK(s.complete_bases == 2);
    CHECK(h.multiplicity(*h.find("1")) == 2);
}

TEST_CASE("strip") {
    auto h = parse_mmph("123,345,561,14.");
    auto r = strip_mult1(h);
    CHECK(serialize_mmph(r.mmph) == "13,345,51,14.");
    CHECK(r.stripped == std::vector<std::string>{"2", "6"});
    CHECK(r.dropped_edges.empty());

    auto lossy = strip_mult1(parse_mmph("15,123,24,34."));
    CHECK(serialize_mmph(lossy.mmph) == "123,24,34.");
    CHECK(lossy.dropped_edges == std::vector<std::size_t>{0});
    CHECK(lossy.warnings.size() == 1);

    auto merged = strip_mult1(parse_mmph("125,126,13,23,134,234."));
    CHECK(merged.dropped_edges == std::vector<std::size_t>{1});
    CHECK(merged.mmph.edge_count() == 5);
}

TEST_CASE("weak vertex deletion") {
    auto h = parse_mmph("123,345,561.");
    auto d = delete_vertex(h, "3");
    CHECK(serialize_mmph(d) == "12,45,561.");
    CHECK_THROWS_AS(delete_vertex(parse_mmph("12,23."), "2"), InvalidHypergraph);
    CHECK_THROWS_AS(delete_vertex(parse_mmph("13,123."), "2"), InvalidHypergraph);
    CHECK_THROWS(delete_vertex(h, "Z"));
}

TEST_CASE("edge removal") {
    auto h = parse_mmph("123,345,561.");
    auto r = remove_hyperedge(h, 1);
    CHECK(serialize_mmph(r) == "123,561.");
    CHECK(r.vertex_count() == 5);
    CHECK_THROWS_AS(remove_hyperedge(h, 3), std::out_of_range);
    CHECK(remove_hyperedges(h, {2, 0}).edge_count() == 1);
    CHECK(serialize_mmph(edge_subset(h, {2, 0})) == "561,123.");
}
