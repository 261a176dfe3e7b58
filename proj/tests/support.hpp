#pragma once

#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testing {

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Random valid hypergraph: l distinct edges of size 2..n over at most k vertices.
inline mmph::Mmph random_mmph(std::mt19937_64& rng, std::size_t k, std::size_t l, std::size_t n) {
    std::set<mmph::Edge> seen;
    std::vector<mmph::Edge> edges;
    for (std::size_t tries = 0; edges.size() < l && tries < 100 * l; ++tries) {
        std::size_t size = std::min(k, 2 + below(rng, n - 1));
        mmph::Edge e;
        while (e.size() < size) {
            auto v = static_cast<mmph::VertexId>(below(rng, k));
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        mmph::Edge key = e;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) edges.push_back(e);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(mmph::vertex_symbol(i));
    return mmph::Mmph::compacted(edges, names);
}

// Same hypergraph with shuffled edge order, shuffled members and fresh symbols.
inline mmph::Mmph scrambled(const mmph::Mmph& h, std::mt19937_64& rng) {
    std::vector<mmph::VertexId> perm(h.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<mmph::VertexId>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<std::string>> named;
    for (const auto& e : h.edges()) {
        std::vector<std::string> ne;
        for (auto v : e) ne.push_back(mmph::vertex_symbol(perm[v]));
        std::shuffle(ne.begin(), ne.end(), rng);
        named.push_back(ne);
    }
    std::shuffle(named.begin(), named.end(), rng);
    return mmph::Mmph::from_named_edges(named);
}

} // namespace testing
