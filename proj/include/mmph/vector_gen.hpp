#pragma once

#include "mmph/bitset.hpp"
#include "mmph/exact_ring.hpp"
#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmph {

/// Literal vector components, e.g. {0, 1, -1, 2w, w2, -w2, 2w2}. Used as given:
/// the set is not closed under ring operations.
struct ComponentSet {
    std::vector<RingScalar> values;
    Ring ring = Ring::Rational;
};

/// Comma-separated scalars in the scalar grammar. Requires 0 and a nonzero
/// element; duplicates are removed.
ComponentSet parse_components(std::string_view csv);
ComponentSet make_components(std::vector<RingScalar> values);

inline constexpr std::uint64_t kMaxTuples = 10'000'000;

/// Every nonzero n-tuple over the set, deduplicated projectively, sorted.
std::vector<Ray> enumerate_rays(const ComponentSet& s, std::size_t n, std::uint64_t max_tuples = kMaxTuples);

/// Adjacency bitsets of the exact Hermitian orthogonality graph.
std::vector<Bitset> orthogonality_graph(std::span<const Ray> rays, unsigned threads = 1);

/// All cliques of exactly `size` vertices, each ascending, in lexicographic order.
std::vector<std::vector<std::uint32_t>> cliques_of_size(std::span<const Bitset> adjacency, std::size_t size);

/// All maximal cliques with at least `min_size` vertices (pivoting
/// Bron-Kerbosch), each ascending, in lexicographic order.
std::vector<std::vector<std::uint32_t>> maximal_cliques(std::span<const Bitset> adjacency, std::size_t min_size = 2);

enum class EdgeMode { BasesOnly, AllMaximalCliques };

enum class ComponentFilter {
    /// Keep only the connected component with the most hyperedges.
    Largest,
    /// Keep every hyperedge.
    All,
};

struct GenerationOptions {
    EdgeMode mode = EdgeMode::BasesOnly;
    ComponentFilter filter = ComponentFilter::Largest;
    unsigned threads = 1;
};

struct ComponentSize {
    std::size_t k = 0;
    std::size_t l = 0;
};

struct GenerationReport {
    std::size_t tuples = 0;
    std::size_t rays = 0;              // after projective deduplication
    std::size_t orthogonal_pairs = 0;
    std::size_t bases = 0;             // size-n cliques
    std::size_t maximal_cliques = 0;   // maximal cliques with >= 2 members
    std::vector<ComponentSize> components; // of the selected edge family, largest first
    std::size_t k = 0;
    std::size_t l = 0;
    double millis = 0.0;
};

struct MasterResult {
    Mmph mmph;
    Coordinatization coords;
    GenerationReport report;
};

/// Builds the master hypergraph of a component set. Vertices are labeled in
/// ray order with the MMP alphabet.
MasterResult master_from_components(const ComponentSet& s, std::size_t n, const GenerationOptions& options = {});

/// The ray orthogonal to n-1 mutually orthogonal rays in dimension n (3 or 4),
/// by exact elimination over the field.
Ray completion(std::span<const Ray> rays);

struct Violation {
    enum class Kind { Missing, NotOrthogonal, Duplicate, NotSpanning };
    Kind kind;
    std::size_t edge = 0;               // for NotOrthogonal / NotSpanning
    std::vector<std::string> vertices;  // names involved
};

const char* violation_name(Violation::Kind k) noexcept;

struct VerificationReport {
    std::size_t edges_checked = 0;
    std::size_t edges_orthogonal = 0;
    std::size_t distinct_rays = 0;
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

VerificationReport verify_coordinatization(const Mmph& h, const Coordinatization& c);

/// Rank of a list of vectors over their field.
std::size_t rank(std::span<const RayVector> vectors);

} // namespace mmph
