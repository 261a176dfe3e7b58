#include <doctest.h>

#include "mmph/canonical.hpp"
#include "mmph/catalog.hpp"
#include "mmph/coloring.hpp"
#include "mmph/vector_gen.hpp"

#include <thread>

using namespace mmph;

TEST_CASE("every entry is valid and coordinatized entries verify") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto& e = catalog_get(name);
        CHECK(e.name == name);
        CHECK(e.mmph.edge_count() > 0);
        CHECK_FALSE(e.recipe.empty());
        if (!e.coords) continue;
        auto rep = verify_coordinatization(e.mmph, *e.coords);
        if (name == "25-16" || name == "19-9") {
            // Weak extensions may repeat rays; orthogonality still holds.
            CHECK(rep.edges_orthogonal == e.mmph.edge_count());
        } else {
            CHECK(rep.ok());
        }
    }
    CHECK_THROWS_AS(catalog_get("no-such-set"), std::invalid_argument);
}

TEST_CASE("expected sizes") {
    auto size = [](const char* name) {
        const auto& h = catalog_get(name).mmph;
        return std::pair{h.vertex_count(), h.edge_count()};
    };
    CHECK(size("69-50") == std::pair<std::size_t, std::size_t>{69, 50});
    CHECK(size("33-50") == std::pair<std::size_t, std::size_t>{33, 50});
    CHECK(size("yu-oh-13-16") == std::pair<std::size_t, std::size_t>{13, 16});
    CHECK(size("25-16") == std::pair<std::size_t, std::size_t>{25, 16});
    CHECK(size("24-24") == std::pair<std::size_t, std::size_t>{24, 24});
    CHECK(size("18-9") == std::pair<std::size_t, std::size_t>{18, 9});
    CHECK(size("17-9") == std::pair<std::size_t, std::size_t>{17, 9});
    CHECK(size("19-9") == std::pair<std::size_t, std::size_t>{19, 9});
    CHECK(catalog_get("69-50").provenance == Provenance::Embedded);
    CHECK(catalog_get("33-50").provenance == Provenance::Derived);
}

TEST_CASE("recipes are pure") {
    auto first = canonical_form(catalog_get("18-9").mmph).certificate;
    auto m = master_from_components(parse_components("0,1,-1"), 4);
    CHECK(canonical_form(m.mmph).certificate == canonical_form(catalog_get("24-24").mmph).certificate);
    CHECK(canonical_form(catalog_get("18-9").mmph).certificate == first);
}

TEST_CASE("concurrent reads") {
    std::vector<std::jthread> pool;
    std::vector<std::size_t> sizes(4);
    for (std::size_t i = 0; i < 4; ++i)
        pool.emplace_back([&, i] { sizes[i] = catalog_get("master-peres").mmph.vertex_count(); });
    pool.clear();
    for (auto s : sizes) CHECK(s == 81);
}
