#include <doctest.h>

#include "mmph/errors.hpp"
#include "mmph/vector_gen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace mmph;

namespace {

using C = std::complex<double>;
const double kPi = std::acos(-1.0);
const C w = std::polar(1.0, 2 * kPi / 3);

// Floating-point reference: enumerate tuples, normalize by the first nonzero
// entry, merge rays whose coordinates agree to 1e-9, then count orthogonal
// n-sets by direct search and the connected component with most of them.
struct Oracle {
    std::vector<std::vector<C>> rays;
    std::vector<std::vector<std::size_t>> bases;
    std::size_t largest_k = 0, largest_l = 0;

    Oracle(const std::vector<C>& comps, std::size_t n) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<C> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = comps[idx[i]];
            add(v);
            std::size_t p = 0;
            while (p < n && ++idx[p] == comps.size()) idx[p++] = 0;
            if (p == n) break;
        }
        auto orth = [&](std::size_t a, std::size_t b) {
            C s = 0;
            for (std::size_t i = 0; i < n; ++i) s += std::conj(rays[a][i]) * rays[b][i];
            return std::abs(s) < 1e-9;
        };
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> grow = [&](std::size_t from) {
            if (cur.size() == n) {
                bases.push_back(cur);
                return;
            }
            for (std::size_t r = from; r < rays.size(); ++r) {
                bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return orth(c, r); });
                if (!ok) continue;
                cur.push_back(r);
                grow(r + 1);
                cur.pop_back();
            }
        };
        grow(0);

        std::vector<std::size_t> parent(rays.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = root(parent[x]);
        };
        for (const auto& b : bases)
            for (auto v : b) parent[root(v)] = root(b[0]);
        std::map<std::size_t, std::pair<std::set<std::size_t>, std::size_t>> comp;
        for (const auto& b : bases) {
            auto& c = comp[root(b[0])];
            c.first.insert(b.begin(), b.end());
            ++c.second;
        }
        for (auto& [r, c] : comp)
            if (c.second > largest_l) {
                largest_l = c.second;
                largest_k = c.first.size();
            }
    }

    void add(std::vector<C> v) {
        std::size_t lead = 0;
        while (lead < v.size() && std::abs(v[lead]) < 1e-12) ++lead;
        if (lead == v.size()) return;
        C s = v[lead];
        for (auto& x : v) x /= s;
        for (const auto& r : rays) {
            bool same = true;
            for (std::size_t i = 0; i < v.size() && same; ++i) same = std::abs(r[i] - v[i]) < 1e-9;
            if (same) return;
        }
        rays.push_back(v);
    }
};

} // namespace

TEST_CASE("ray enumeration and bases agree with the floating-point oracle") {
    struct Case {
        const char* comps;
        std::vector<C> values;
        std::size_t n;
    };
    const C r2 = std::sqrt(2.0);
    std::vector<Case> cases = {
        {"0,1,-1", {0, 1, -1}, 3},
        {"0,1,-1", {0, 1, -1}, 4},
        {"0,1,-1,2,-2,5", {0, 1, -1, 2, -2, 5}, 3},
        {"0,1,-1,r2,-r2,3", {0, 1, -1, r2, -r2, 3}, 3},
        {"0,w,-w,2w,w2,-w2,2w2", {0, w, -w, 2. * w, w * w, -w * w, 2. * w * w}, 3},
        {"0,1,-1,2w,w2,-w2,2w2", {0, 1, -1, 2. * w, w * w, -w * w, 2. * w * w}, 3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.comps);
        Oracle oracle(c.values, c.n);
        GenerationOptions all;
        all.filter = ComponentFilter::All;
        auto m = master_from_components(parse_components(c.comps), c.n, all);
        CHECK(m.report.rays == oracle.rays.size());
        CHECK(m.report.bases == oracle.bases.size());
        CHECK(m.mmph.edge_count() == oracle.bases.size());
        auto largest = master_from_components(parse_components(c.comps), c.n);
        CHECK(largest.mmph.vertex_count() == oracle.largest_k);
        CHECK(largest.mmph.edge_count() == oracle.largest_l);
        CHECK(verify_coordinatization(largest.mmph, largest.coords).ok());
    }
}

TEST_CASE("maximal cliques of the {0,1,-1} rays in dimension 3") {
    auto rays = enumerate_rays(parse_components("0,1,-1"), 3);
    REQUIRE(rays.size() == 13);
    auto adj = orthogonality_graph(rays);
    // Oracle: every subset of the 13 rays, kept when pairwise orthogonal and maximal.
    std::size_t pairs = 0, triples = 0;
    for (std::uint32_t mask = 1; mask < (1U << 13); ++mask) {
        if (std::popcount(mask) < 2) continue;
        bool clique = true, maximal = true;
        for (int a = 0; a < 13 && clique; ++a)
            for (int b = a + 1; b < 13 && clique; ++b)
                if ((mask >> a & 1) && (mask >> b & 1)) clique = orthogonal(rays[a], rays[b]);
        if (!clique) continue;
        for (int x = 0; x < 13 && maximal; ++x) {
            if (mask >> x & 1) continue;
            bool all = true;
            for (int a = 0; a < 13 && all; ++a)
                if (mask >> a & 1) all = orthogonal(rays[a], rays[x]);
            if (all) maximal = false;
        }
        if (!maximal) continue;
        (std::popcount(mask) == 2 ? pairs : triples) += 1;
    }
    auto cliques = maximal_cliques(adj);
    std::size_t p = 0, t = 0;
    for (const auto& c : cliques) (c.size() == 2 ? p : t) += 1;
    CHECK(p == pairs);
    CHECK(t == triples);
    CHECK(cliques_of_size(adj, 3).size() == triples);
}

TEST_CASE("component parsing") {
    CHECK(parse_components("0,1,-1,1").values.size() == 3);
    CHECK(parse_components("0,w,2w2").ring == Ring::Eisenstein);
    CHECK_THROWS(parse_components("1,2"));
    CHECK_THROWS(parse_components("0"));
    CHECK_THROWS(parse_components("0,r2,w"));
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_rays(parse_components("0,1,-1,2,-2,3,-3"), 12), BudgetExceeded);
}

TEST_CASE("completion") {
    auto rays = enumerate_rays(parse_components("0,1,-1,2w,w2,-w2,2w2"), 3);
    auto adj = orthogonality_graph(rays);
    std::size_t checked = 0;
    for (std::size_t a = 0; a < rays.size() && checked < 200; ++a)
        adj[a].for_each([&](std::size_t b) {
            if (b <= a) return;
            std::vector<Ray> pair{rays[a], rays[b]};
            Ray c = completion(pair);
            CHECK(orthogonal(c, rays[a]));
            CHECK(orthogonal(c, rays[b]));
            ++checked;
        });
    CHECK(checked > 0);
    auto r4 = enumerate_rays(parse_components("0,1,-1"), 4);
    auto adj4 = orthogonality_graph(r4);
    auto triples = cliques_of_size(adj4, 3);
    REQUIRE_FALSE(triples.empty());
    std::vector<Ray> t{r4[triples[0][0]], r4[triples[0][1]], r4[triples[0][2]]};
    Ray c = completion(t);
    for (const auto& r : t) CHECK(orthogonal(c, r));
    CHECK_THROWS(completion(std::vector<Ray>{rays[0], rays[0]}));
}

TEST_CASE("verification reports violations") {
    auto m = master_from_components(parse_components("0,1,-1"), 4);
    CHECK(verify_coordinatization(m.mmph, m.coords).ok());
    Coordinatization broken = m.coords;
    const auto& e = m.mmph.edge(0);
    broken.set(m.mmph.name(e[0]), *m.coords.find(m.mmph.name(e[1])));
    auto rep = verify_coordinatization(m.mmph, broken);
    CHECK_FALSE(rep.ok());
    Coordinatization missing(4);
    CHECK_FALSE(verify_coordinatization(m.mmph, missing).ok());
}
