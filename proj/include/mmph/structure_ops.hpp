#pragma once

#include "mmph/coloring.hpp"
#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mmph {

struct CriticalityReport {
    bool contextual = false;
    bool critical = false;
    std::vector<std::size_t> removable_edges; // edges whose removal keeps it contextual
    std::uint64_t decider_calls = 0;
    std::uint64_t nodes = 0;
};

/// Contextual, and every single-edge removal is non-contextual. The l probes
/// run on up to `threads` workers.
CriticalityReport criticality(const Mmph& h, unsigned threads = 1);
bool is_critical(const Mmph& h, unsigned threads = 1);

struct ReductionTrace {
    std::uint64_t seed = 0;
    std::vector<std::size_t> removed;   // indices into the input hypergraph's edge list
    Mmph result;
    StatsReport stats;
    std::uint64_t decider_calls = 0;
};

/// Visits the edges once in seed-shuffled order, dropping each one whose
/// removal keeps the set contextual. One pass suffices: a set that is
/// non-contextual without edge e stays so as more edges go. The result is
/// critical. Throws std::invalid_argument if h is not contextual.
ReductionTrace reduce_to_critical(const Mmph& h, std::uint64_t seed);

/// Independent reductions with seeds seed, seed+1, ..., in seed order.
std::vector<ReductionTrace> reduce_trials(const Mmph& h, std::uint64_t seed, std::size_t trials, unsigned threads = 1);

struct Extension {
    Mmph mmph;
    Coordinatization coords;
    std::vector<std::string> added;    // vertices created by completion
    std::vector<std::string> merged;   // strong extension: names folded into an equal ray
    std::vector<std::string> warnings; // edges left untouched
};

/// Adds one fresh multiplicity-1 vertex carrying the completion ray to each
/// edge of size n-1. Smaller deficient edges are left alone with a warning.
Extension weak_extend(const Mmph& h, const Coordinatization& c);

/// Weak extension restricted to the listed edge indices.
Extension weak_extend_edges(const Mmph& h, const Coordinatization& c, const std::vector<std::size_t>& edges);

/// weak_extend, then every group of vertices with equal rays becomes one vertex.
Extension strong_extend(const Mmph& h, const Coordinatization& c);

/// Edges of size exactly n-1, in edge order.
std::vector<std::size_t> deficient_edges(const Mmph& h);

struct PartialExtension {
    std::vector<std::size_t> kept_deficient; // edge indices left unextended
    Mmph mmph;
    bool contextual = false;
    std::size_t complete_bases = 0;
};

/// For every choice of `keep_deficient` size-(n-1) edges, extends the others
/// and reports contextuality and complete-basis count. Choices are
/// enumerated in lexicographic order.
std::vector<PartialExtension> partial_extension_search(const Mmph& h, const Coordinatization& c,
                                                       std::size_t keep_deficient, unsigned threads = 1);

struct SubsetQuery {
    std::size_t max_k = 8;
    std::size_t max_l = 8;
    std::size_t max_complete_bases = 1;
    std::size_t min_complete_bases = 0;
    bool require_contextual = true;
    bool allow_vertex_deletion = true;
    std::uint64_t budget = 10'000'000; // search nodes
    std::uint64_t seed = 0;
    std::size_t max_results = 16;
};

struct SubsetHit {
    Mmph mmph;
    std::string certificate;
    std::vector<std::size_t> edges;         // indices into the host
    std::vector<std::string> deleted;       // vertices weakly deleted afterwards
};

struct SubsetSearchResult {
    std::vector<SubsetHit> hits; // sorted by certificate
    std::uint64_t nodes = 0;
    bool exhausted = false; // the whole space was searched within budget
};

/// Grows connected edge subsets from seed-shuffled start edges (depth-first,
/// canonical-certificate memo), optionally weakly deleting multiplicity-1
/// vertices, and keeps sets meeting every bound of the query.
SubsetSearchResult search_small_contextual(const Mmph& h, const SubsetQuery& q);

} // namespace mmph
