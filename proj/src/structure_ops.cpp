#include "mmph/structure_ops.hpp"

#include "mmph/errors.hpp"
#include "mmph/parallel.hpp"
#include "mmph/vector_gen.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>

namespace mmph {

CriticalityReport criticality(const Mmph& h, unsigned threads) {
    CriticalityReport report;
    auto whole = decide(h);
    report.decider_calls = 1;
    report.nodes = whole.nodes;
    report.contextual = whole.verdict == Verdict::Contextual;
    if (!report.contextual) return report;

    std::vector<char> keeps(h.edge_count(), 0);
    std::vector<std::uint64_t> nodes(h.edge_count(), 0);
    parallel_for(h.edge_count(), threads, [&](std::size_t i) {
        auto r = decide(remove_hyperedge(h, i));
        keeps[i] = r.verdict == Verdict::Contextual ? 1 : 0;
        nodes[i] = r.nodes;
    });
    report.decider_calls += h.edge_count();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        report.nodes += nodes[i];
        if (keeps[i]) report.removable_edges.push_back(i);
    }
    report.critical = report.removable_edges.empty();
    return report;
}

bool is_critical(const Mmph& h, unsigned threads) { return criticality(h, threads).critical; }

namespace {

// Fisher-Yates driven directly by the engine so orders do not depend on the
// standard library's distribution implementations.
template <class T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

} // namespace

ReductionTrace reduce_to_critical(const Mmph& h, std::uint64_t seed) {
    ReductionTrace trace;
    trace.seed = seed;
    trace.decider_calls = 1;
    if (!is_contextual(h)) throw std::invalid_argument("reduce_to_critical needs a contextual hypergraph");

    std::vector<std::size_t> order(h.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    seeded_shuffle(order, seed);

    std::vector<std::size_t> removed;
    for (std::size_t e : order) {
        removed.push_back(e);
        ++trace.decider_calls;
        if (removed.size() == h.edge_count() || !is_contextual(remove_hyperedges(h, removed))) removed.pop_back();
    }
    trace.removed = removed;
    trace.result = remove_hyperedges(h, removed);
    trace.stats = stats(trace.result);
    return trace;
}

std::vector<ReductionTrace> reduce_trials(const Mmph& h, std::uint64_t seed, std::size_t trials, unsigned threads) {
    if (!is_contextual(h)) throw std::invalid_argument("reduce_to_critical needs a contextual hypergraph");
    std::vector<ReductionTrace> out(trials);
    parallel_for(trials, threads, [&](std::size_t i) { out[i] = reduce_to_critical(h, seed + i); });
    return out;
}

std::vector<std::size_t> deficient_edges(const Mmph& h) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (h.edge(i).size() + 1 == h.dimension()) out.push_back(i);
    return out;
}

namespace {

void require_coordinates(const Mmph& h, const Coordinatization& c) {
    for (const auto& n : h.names())
        if (!c.contains(n)) throw std::invalid_argument("vertex '" + n + "' has no coordinates");
    if (c.dimension() != h.dimension())
        throw std::invalid_argument("coordinatization dimension " + std::to_string(c.dimension()) +
                                    " differs from hypergraph dimension " + std::to_string(h.dimension()));
}

std::vector<Ray> edge_rays(const Mmph& h, const Coordinatization& c, std::size_t i) {
    std::vector<Ray> rays;
    for (VertexId v : h.edge(i)) rays.push_back(*c.find(h.name(v)));
    for (std::size_t a = 0; a < rays.size(); ++a)
        for (std::size_t b = a + 1; b < rays.size(); ++b)
            if (!orthogonal(rays[a], rays[b]))
                throw std::invalid_argument("edge " + std::to_string(i) + " members are not mutually orthogonal");
    return rays;
}

std::string fresh_name(std::set<std::string>& used) {
    for (std::size_t i = 0;; ++i) {
        auto s = vertex_symbol(i);
        if (used.insert(s).second) return s;
    }
}

} // namespace

Extension weak_extend_edges(const Mmph& h, const Coordinatization& c, const std::vector<std::size_t>& chosen) {
    require_coordinates(h, c);
    Extension out;
    out.coords = c;
    std::set<std::string> used(h.names().begin(), h.names().end());
    std::vector<std::string> names = h.names();
    std::vector<Edge> edges = h.edges();
    std::vector<char> pick(h.edge_count(), 0);
    for (auto i : chosen) pick.at(i) = 1;

    const std::size_t n = h.dimension();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto rays = edge_rays(h, c, i);
        if (!pick[i] || rays.size() >= n) continue;
        if (rays.size() + 1 != n) {
            out.warnings.push_back("edge " + std::to_string(i) + " has " + std::to_string(rays.size()) +
                                   " vertices; its completion is not unique, left unextended");
            continue;
        }
        Ray fill = completion(rays);
        std::string name = fresh_name(used);
        names.push_back(name);
        edges[i].push_back(static_cast<VertexId>(names.size() - 1));
        out.coords.set(name, fill);
        out.added.push_back(name);
    }
    out.mmph = Mmph(std::move(edges), std::move(names));
    return out;
}

Extension weak_extend(const Mmph& h, const Coordinatization& c) {
    std::vector<std::size_t> all(h.edge_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return weak_extend_edges(h, c, all);
}

Extension strong_extend(const Mmph& h, const Coordinatization& c) {
    Extension weak = weak_extend(h, c);
    const Mmph& w = weak.mmph;
    // Representative for each ray: the lowest vertex id carrying it.
    std::map<Ray, VertexId> first;
    std::vector<VertexId> target(w.vertex_count());
    for (VertexId v = 0; v < w.vertex_count(); ++v) {
        auto [it, fresh] = first.try_emplace(*weak.coords.find(w.name(v)), v);
        target[v] = it->second;
        if (!fresh) weak.merged.push_back(w.name(v));
    }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < w.edge_count(); ++i) {
        Edge e;
        for (VertexId v : w.edge(i)) e.push_back(target[v]);
        Edge key = e;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw std::invalid_argument("edge " + std::to_string(i) + " would contain one ray twice after merging");
        if (!seen.insert(key).second) {
            weak.warnings.push_back("edge " + std::to_string(i) + " coincides with an earlier edge after merging; dropped");
            continue;
        }
        edges.push_back(std::move(e));
    }
    Extension out;
    out.mmph = Mmph::compacted(edges, w.names());
    for (const auto& n : out.mmph.names()) out.coords.set(n, *weak.coords.find(n));
    for (const auto& n : weak.added)
        if (out.mmph.find(n)) out.added.push_back(n);
    out.merged = std::move(weak.merged);
    out.warnings = std::move(weak.warnings);
    return out;
}

namespace {

void combinations(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(r);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    if (r > n) return;
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

} // namespace

std::vector<PartialExtension> partial_extension_search(const Mmph& h, const Coordinatization& c,
                                                       std::size_t keep_deficient, unsigned threads) {
    require_coordinates(h, c);
    auto deficient = deficient_edges(h);
    if (keep_deficient > deficient.size())
        throw std::invalid_argument("cannot keep " + std::to_string(keep_deficient) + " of " +
                                    std::to_string(deficient.size()) + " deficient edges");
    std::vector<std::vector<std::size_t>> choices;
    combinations(deficient.size(), keep_deficient, choices);
    std::vector<PartialExtension> out(choices.size());
    parallel_for(choices.size(), threads, [&](std::size_t ci) {
        std::vector<char> keep(h.edge_count(), 0);
        PartialExtension& pe = out[ci];
        for (auto j : choices[ci]) {
            keep[deficient[j]] = 1;
            pe.kept_deficient.push_back(deficient[j]);
        }
        std::vector<std::size_t> extend;
        for (auto d : deficient)
            if (!keep[d]) extend.push_back(d);
        pe.mmph = weak_extend_edges(h, c, extend).mmph;
        pe.contextual = is_contextual(pe.mmph);
        pe.complete_bases = pe.mmph.complete_bases();
    });
    return out;
}

} // namespace mmph
