#include <doctest.h>

#include "mmph/canonical.hpp"
#include "mmph/catalog.hpp"
#include "mmph/containment.hpp"
#include "mmph/structure_ops.hpp"
#include "support.hpp"

using namespace mmph;

TEST_CASE("identity and trivial cases") {
    auto sq = parse_mmph("12,23,34,41.");
    auto r = is_subhypergraph(sq, sq);
    CHECK(r.outcome == Containment::Contained);
    CHECK(is_subhypergraph(parse_mmph("12,23,31."), sq).outcome == Containment::NotContained);
    CHECK(is_subhypergraph(parse_mmph("12,23."), sq).outcome == Containment::Contained);
    CHECK(is_subhypergraph(parse_mmph("123."), sq).outcome == Containment::NotContained);
    CHECK(is_subhypergraph(parse_mmph("12,23,31."), parse_mmph("123.")).outcome == Containment::Contained);
}

TEST_CASE("derived sub-hypergraphs are contained") {
    std::mt19937_64 rng(31);
    const auto& host = catalog_get("69-50").mmph;
    for (int i = 0; i < 200; ++i) {
        Mmph h = host;
        const int steps = 1 + static_cast<int>(testing::below(rng, 30));
        for (int s = 0; s < steps && h.edge_count() > 1; ++s) {
            if (rng() % 3) {
                h = remove_hyperedge(h, testing::below(rng, h.edge_count()));
            } else {
                const auto& name = h.name(static_cast<VertexId>(testing::below(rng, h.vertex_count())));
                try {
                    h = delete_vertex(h, name);
                } catch (const std::exception&) {
                }
            }
        }
        auto r = is_subhypergraph(h, host);
        REQUIRE(r.outcome == Containment::Contained);
        CHECK(verify_embedding(h, host, *r.embedding));
    }
}

TEST_CASE("isomorphic patterns agree") {
    std::mt19937_64 rng(12);
    const auto& host = catalog_get("18-9").mmph;
    for (int i = 0; i < 40; ++i) {
        auto a = testing::random_mmph(rng, 8, 5, 3);
        auto b = testing::scrambled(a, rng);
        auto ra = is_subhypergraph(a, host), rb = is_subhypergraph(b, host);
        CHECK(ra.outcome == rb.outcome);
    }
}

TEST_CASE("budget gives indeterminate, not none") {
    const auto& big = catalog_get("24-24").mmph;
    const auto& small = catalog_get("18-9").mmph;
    CHECK(is_subhypergraph(small, big, ContainmentOptions{5}).outcome == Containment::Indeterminate);
    CHECK(is_subhypergraph(small, big).outcome == Containment::Contained);
}

TEST_CASE("verify_embedding rejects bad maps") {
    auto sq = parse_mmph("12,23,34,41.");
    CHECK_FALSE(verify_embedding(sq, sq, Embedding{{0, 0, 1, 2}}));
    CHECK_FALSE(verify_embedding(sq, sq, Embedding{{0, 2, 1, 3}}));
    CHECK(verify_embedding(sq, sq, Embedding{{1, 2, 3, 0}}));
}
