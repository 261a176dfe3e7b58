#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmph {

using VertexId = std::uint32_t;
using Edge = std::vector<VertexId>;

/// An MMP hypergraph: k vertices, l hyperedges, dimension n = largest edge.
///
/// Vertices are dense ids 0..k-1, each carrying a unique display name (the MMP
/// symbol it was parsed from, or the one it was generated with). Edges keep
/// document order; two edges with the same vertex set are rejected. Values
/// are immutable: every edit returns a new hypergraph and preserves the names
/// of surviving vertices.
class Mmph {
public:
    Mmph() = default;

    /// Validates and takes ownership. Every id below names.size() must occur in
    /// some edge.
    Mmph(std::vector<Edge> edges, std::vector<std::string> names);

    /// Edges over vertex names; ids are assigned in order of first appearance.
    static Mmph from_named_edges(const std::vector<std::vector<std::string>>& edges);

    /// Like the constructor, but vertices absent from every edge are dropped and
    /// the remaining ids compacted in their original order.
    static Mmph compacted(const std::vector<Edge>& edges, const std::vector<std::string>& names);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find(std::string_view name) const;

    /// Edges incident to each vertex, ascending.
    const std::vector<std::vector<std::size_t>>& incidence() const noexcept { return incidence_; }
    std::size_t multiplicity(VertexId v) const { return incidence_.at(v).size(); }

    std::size_t complete_bases() const noexcept;

    /// Edge i's member names, in stored order.
    std::vector<std::string> edge_names(std::size_t i) const;

    friend bool operator==(const Mmph& a, const Mmph& b) { return a.edges_ == b.edges_ && a.names_ == b.names_; }

private:
    void validate_and_index();

    std::vector<Edge> edges_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::size_t dimension_ = 0;
};

struct StatsReport {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t n = 0;
    std::map<std::size_t, std::size_t> kappa_histogram;
    std::map<std::size_t, std::size_t> multiplicity_histogram;
    std::size_t complete_bases = 0;
};

StatsReport stats(const Mmph& h);

struct StripResult {
    Mmph mmph;
    std::vector<std::string> stripped;      // names of removed multiplicity-1 vertices
    std::vector<std::size_t> dropped_edges; // input edge indices that fell below size 2 or duplicated another
    std::vector<std::string> warnings;
};

/// Removes every multiplicity-1 vertex in one pass. Surviving multiplicities
/// are unchanged, so the result is already a fixpoint when no edge is dropped.
StripResult strip_mult1(const Mmph& h);

/// Weak deletion: drops `name` from every edge. Throws InvalidHypergraph if an
/// edge would fall below two vertices or collide with another edge.
Mmph delete_vertex(const Mmph& h, std::string_view name);

/// Removes edge `index`; vertices left in no edge disappear.
Mmph remove_hyperedge(const Mmph& h, std::size_t index);

/// Removes a set of edges at once (indices need not be sorted).
Mmph remove_hyperedges(const Mmph& h, const std::vector<std::size_t>& indices);

/// Sub-hypergraph spanned by the chosen edges, in the given order.
Mmph edge_subset(const Mmph& h, const std::vector<std::size_t>& indices);

/// Same structure with vertex names replaced (used for relabeling tests).
Mmph relabeled(const Mmph& h, const std::vector<VertexId>& permutation);

} // namespace mmph
