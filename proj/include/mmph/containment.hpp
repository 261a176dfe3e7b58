#pragma once

#include "mmph/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mmph {

/// Injective vertex map from a small hypergraph into a large one such that
/// every small edge lands inside some large edge.
struct Embedding {
    std::vector<VertexId> map; // small vertex id -> large vertex id
};

enum class Containment { Contained, NotContained, Indeterminate };

const char* containment_name(Containment c) noexcept;

struct ContainmentOptions {
    std::uint64_t node_budget = 50'000'000;
};

struct ContainmentResult {
    Containment outcome = Containment::Indeterminate;
    std::optional<Embedding> embedding; // set iff Contained
    std::uint64_t nodes = 0;
};

/// Backtracking over vertex images. Candidates are filtered by degree in the
/// 2-section and by largest incident edge, then by the partial edges already
/// mapped. Running out of budget yields Indeterminate, never NotContained.
ContainmentResult is_subhypergraph(const Mmph& small, const Mmph& large, const ContainmentOptions& options = {});

bool verify_embedding(const Mmph& small, const Mmph& large, const Embedding& e);

} // namespace mmph
