#pragma once

#include "mmph/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mmph {

struct CanonicalOptions {
    std::uint64_t node_budget = 2'000'000; // search-tree nodes before BudgetExceeded
};

struct CanonicalForm {
    Mmph mmph;                       // relabeled, edges sorted
    std::string certificate;         // equal iff isomorphic
    std::vector<VertexId> labeling;  // input vertex id -> canonical id
    std::uint64_t nodes = 0;
    std::size_t automorphisms_found = 0;
};

/// Canonical labeling by colour refinement of the vertex/edge incidence graph
/// plus individualization search with automorphism pruning.
CanonicalForm canonical_form(const Mmph& h, const CanonicalOptions& options = {});

/// Vertex bijection a -> b mapping edges onto edges, if one exists.
std::optional<std::vector<VertexId>> find_isomorphism(const Mmph& a, const Mmph& b,
                                                      const CanonicalOptions& options = {});

bool is_isomorphic(const Mmph& a, const Mmph& b, const CanonicalOptions& options = {});

/// True when `map` sends every edge of a onto an edge of b and is bijective.
bool verify_isomorphism(const Mmph& a, const Mmph& b, const std::vector<VertexId>& map);

} // namespace mmph
