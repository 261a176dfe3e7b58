#include "mmph/hypergraph.hpp"

#include "mmph/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace mmph {

Mmph::Mmph(std::vector<Edge> edges, std::vector<std::string> names) : edges_(std::move(edges)), names_(std::move(names)) {
    validate_and_index();
}

void Mmph::validate_and_index() {
    const std::size_t k = names_.size();
    incidence_.assign(k, {});
    dimension_ = 0;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.size() < 2) throw InvalidHypergraph("hyperedge " + std::to_string(i) + " has fewer than 2 vertices");
        Edge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidHypergraph("hyperedge " + std::to_string(i) + " repeats a vertex");
        if (sorted.back() >= k) throw InvalidHypergraph("hyperedge " + std::to_string(i) + " uses an unknown vertex");
        if (!seen.insert(sorted).second) throw InvalidHypergraph("duplicate hyperedge " + std::to_string(i));
        for (VertexId v : e) incidence_[v].push_back(i);
        dimension_ = std::max(dimension_, e.size());
    }
    for (std::size_t v = 0; v < k; ++v)
        if (incidence_[v].empty()) throw InvalidHypergraph("vertex '" + names_[v] + "' is in no hyperedge");
    std::set<std::string_view> unique(names_.begin(), names_.end());
    if (unique.size() != names_.size()) throw InvalidHypergraph("vertex names are not unique");
}

Mmph Mmph::from_named_edges(const std::vector<std::vector<std::string>>& named) {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    edges.reserve(named.size());
    for (const auto& ne : named) {
        Edge e;
        e.reserve(ne.size());
        for (const auto& n : ne) {
            auto [it, fresh] = ids.try_emplace(n, static_cast<VertexId>(names.size()));
            if (fresh) names.push_back(n);
            e.push_back(it->second);
        }
        edges.push_back(std::move(e));
    }
    return Mmph(std::move(edges), std::move(names));
}

Mmph Mmph::compacted(const std::vector<Edge>& edges, const std::vector<std::string>& names) {
    std::vector<char> used(names.size(), 0);
    for (const auto& e : edges)
        for (VertexId v : e) used.at(v) = 1;
    std::vector<VertexId> remap(names.size(), 0);
    std::vector<std::string> kept;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (!used[v]) continue;
        remap[v] = static_cast<VertexId>(kept.size());
        kept.push_back(names[v]);
    }
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        Edge ne;
        ne.reserve(e.size());
        for (VertexId v : e) ne.push_back(remap[v]);
        out.push_back(std::move(ne));
    }
    return Mmph(std::move(out), std::move(kept));
}

std::optional<VertexId> Mmph::find(std::string_view name) const {
    for (std::size_t v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return static_cast<VertexId>(v);
    return std::nullopt;
}

std::size_t Mmph::complete_bases() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.size() == dimension_; }));
}

std::vector<std::string> Mmph::edge_names(std::size_t i) const {
    std::vector<std::string> out;
    for (VertexId v : edges_.at(i)) out.push_back(names_[v]);
    return out;
}

StatsReport stats(const Mmph& h) {
    StatsReport r;
    r.k = h.vertex_count();
    r.l = h.edge_count();
    r.n = h.dimension();
    for (const auto& e : h.edges()) ++r.kappa_histogram[e.size()];
    for (const auto& inc : h.incidence()) ++r.multiplicity_histogram[inc.size()];
    r.complete_bases = h.complete_bases();
    return r;
}

StripResult strip_mult1(const Mmph& h) {
    StripResult result;
    std::vector<char> drop(h.vertex_count(), 0);
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (h.multiplicity(v) == 1) {
            drop[v] = 1;
            result.stripped.push_back(h.name(v));
        }
    }
    std::vector<Edge> kept;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        Edge e;
        for (VertexId v : h.edge(i))
            if (!drop[v]) e.push_back(v);
        if (e.size() < 2) {
            result.dropped_edges.push_back(i);
            result.warnings.push_back("edge " + std::to_string(i) + " fell to size " + std::to_string(e.size()) +
                                      " and was dropped");
            continue;
        }
        Edge key = e;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            result.dropped_edges.push_back(i);
            result.warnings.push_back("edge " + std::to_string(i) + " duplicated an earlier edge and was dropped");
            continue;
        }
        kept.push_back(std::move(e));
    }
    if (kept.empty()) throw InvalidHypergraph("stripping multiplicity-1 vertices leaves an empty hypergraph");
    result.mmph = Mmph::compacted(kept, h.names());
    return result;
}

Mmph delete_vertex(const Mmph& h, std::string_view name) {
    auto v = h.find(name);
    if (!v) throw InvalidHypergraph("unknown vertex '" + std::string(name) + "'");
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        Edge e;
        for (VertexId u : h.edge(i))
            if (u != *v) e.push_back(u);
        if (e.size() < 2)
            throw InvalidHypergraph("deleting '" + std::string(name) + "' shrinks edge " + std::to_string(i) +
                                    " below 2 vertices");
        edges.push_back(std::move(e));
    }
    return Mmph::compacted(edges, h.names());
}

Mmph remove_hyperedge(const Mmph& h, std::size_t index) {
    if (index >= h.edge_count())
        throw std::out_of_range("edge index " + std::to_string(index) + " out of range");
    return remove_hyperedges(h, {index});
}

Mmph remove_hyperedges(const Mmph& h, const std::vector<std::size_t>& indices) {
    std::vector<char> gone(h.edge_count(), 0);
    for (auto i : indices) gone.at(i) = 1;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (!gone[i]) edges.push_back(h.edge(i));
    if (edges.empty()) return {};
    return Mmph::compacted(edges, h.names());
}

Mmph edge_subset(const Mmph& h, const std::vector<std::size_t>& indices) {
    std::vector<Edge> edges;
    edges.reserve(indices.size());
    for (auto i : indices) edges.push_back(h.edge(i));
    if (edges.empty()) return {};
    return Mmph::compacted(edges, h.names());
}

Mmph relabeled(const Mmph& h, const std::vector<VertexId>& permutation) {
    if (permutation.size() != h.vertex_count()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        Edge ne;
        for (VertexId v : e) ne.push_back(permutation[v]);
        edges.push_back(std::move(ne));
    }
    return Mmph(std::move(edges), h.names());
}

} // namespace mmph
