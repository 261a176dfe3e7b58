#include "mmph/vector_gen.hpp"

#include "mmph/errors.hpp"
#include "mmph/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

namespace mmph {

ComponentSet make_components(std::vector<RingScalar> values) {
    ComponentSet s;
    for (const auto& v : values) s.ring = join_rings(s.ring, v.ring());
    for (auto& v : values) v = v.promoted(s.ring);
    std::vector<RingScalar> unique;
    for (const auto& v : values)
        if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
    bool has_zero = std::any_of(unique.begin(), unique.end(), [](const RingScalar& x) { return x.is_zero(); });
    bool has_nonzero = std::any_of(unique.begin(), unique.end(), [](const RingScalar& x) { return !x.is_zero(); });
    if (!has_zero) throw std::invalid_argument("component set must contain 0");
    if (!has_nonzero) throw std::invalid_argument("component set has no nonzero element");
    s.values = std::move(unique);
    return s;
}

ComponentSet parse_components(std::string_view csv) {
    std::vector<RingScalar> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = csv.find(',', start);
        values.push_back(parse_scalar(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return make_components(std::move(values));
}

std::vector<Ray> enumerate_rays(const ComponentSet& s, std::size_t n, std::uint64_t max_tuples) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) {
        tuples *= s.values.size();
        if (tuples > max_tuples)
            throw BudgetExceeded("|components|^n exceeds the tuple budget of " + std::to_string(max_tuples));
    }
    std::set<Ray> rays;
    std::vector<std::size_t> digits(n, 0);
    std::vector<RingScalar> comps(n);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            comps[i] = s.values[digits[i]];
            nonzero = nonzero || !comps[i].is_zero();
        }
        if (nonzero) rays.insert(normalize_ray(RayVector(comps)));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < s.values.size()) break;
            digits[i] = 0;
        }
    }
    if (rays.empty()) throw std::invalid_argument("component set yields no nonzero rays");
    std::vector<Ray> out(rays.begin(), rays.end());
    return out;
}

std::vector<Bitset> orthogonality_graph(std::span<const Ray> rays, unsigned threads) {
    const std::size_t count = rays.size();
    std::vector<Bitset> adj(count, Bitset(count));
    // Row i owns the pairs (i, j > i); mirrored afterwards.
    parallel_for(count, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < count; ++j)
            if (orthogonal(rays[i], rays[j])) adj[i].set(j);
    });
    for (std::size_t i = 0; i < count; ++i)
        adj[i].for_each([&](std::size_t j) {
            if (j > i) adj[j].set(i);
        });
    return adj;
}

namespace {

Bitset above(std::size_t bits, std::size_t i) {
    Bitset b(bits);
    for (std::size_t j = i + 1; j < bits; ++j) b.set(j);
    return b;
}

} // namespace

std::vector<std::vector<std::uint32_t>> cliques_of_size(std::span<const Bitset> adjacency, std::size_t size) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t count = adjacency.size();
    if (size == 0 || count == 0) return out;
    std::vector<std::uint32_t> clique;
    std::function<void(const Bitset&)> extend = [&](const Bitset& cand) {
        if (clique.size() == size) {
            out.push_back(clique);
            return;
        }
        // Too few candidates left to finish the clique.
        if (cand.count() < size - clique.size()) return;
        cand.for_each([&](std::size_t j) {
            Bitset next = cand & adjacency[j];
            next &= above(count, j);
            clique.push_back(static_cast<std::uint32_t>(j));
            extend(next);
            clique.pop_back();
        });
    };
    for (std::size_t i = 0; i < count; ++i) {
        if (adjacency[i].count() + 1 < size) continue; // degree pruning
        Bitset cand = adjacency[i] & above(count, i);
        clique.push_back(static_cast<std::uint32_t>(i));
        extend(cand);
        clique.pop_back();
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> maximal_cliques(std::span<const Bitset> adjacency, std::size_t min_size) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t count = adjacency.size();
    if (count == 0) return out;
    std::vector<std::uint32_t> clique;
    std::function<void(Bitset, Bitset)> expand = [&](Bitset candidates, Bitset excluded) {
        if (candidates.none() && excluded.none()) {
            if (clique.size() >= min_size) {
                auto sorted = clique;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(std::move(sorted));
            }
            return;
        }
        // Pivot: the vertex of P u X with most neighbours in P.
        std::size_t pivot = count, best = 0;
        auto consider = [&](std::size_t u) {
            std::size_t c = candidates.count_and(adjacency[u]);
            if (pivot == count || c > best) {
                pivot = u;
                best = c;
            }
        };
        candidates.for_each(consider);
        excluded.for_each(consider);
        Bitset branch = candidates;
        branch.subtract(adjacency[pivot]);
        branch.for_each([&](std::size_t v) {
            clique.push_back(static_cast<std::uint32_t>(v));
            expand(candidates & adjacency[v], excluded & adjacency[v]);
            clique.pop_back();
            candidates.reset(v);
            excluded.set(v);
        });
    };
    Bitset all(count);
    for (std::size_t i = 0; i < count; ++i) all.set(i);
    expand(all, Bitset(count));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<ComponentSize> component_sizes(const std::vector<std::vector<std::uint32_t>>& edges, std::size_t vertices,
                                           std::vector<std::size_t>& edge_component) {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges)
        for (std::size_t i = 1; i < e.size(); ++i) parent[root(e[i])] = root(e[0]);

    std::vector<std::size_t> id(vertices, SIZE_MAX);
    std::vector<ComponentSize> sizes;
    std::vector<std::set<std::uint32_t>> members;
    edge_component.assign(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t r = root(edges[i][0]);
        if (id[r] == SIZE_MAX) {
            id[r] = sizes.size();
            sizes.push_back({});
            members.emplace_back();
        }
        edge_component[i] = id[r];
        ++sizes[id[r]].l;
        members[id[r]].insert(edges[i].begin(), edges[i].end());
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) sizes[c].k = members[c].size();
    return sizes;
}

} // namespace

MasterResult master_from_components(const ComponentSet& s, std::size_t n, const GenerationOptions& options) {
    auto start = std::chrono::steady_clock::now();
    MasterResult result;
    GenerationReport& report = result.report;

    std::vector<Ray> rays = enumerate_rays(s, n);
    report.tuples = 1;
    for (std::size_t i = 0; i < n; ++i) report.tuples *= s.values.size();
    report.rays = rays.size();

    auto adj = orthogonality_graph(rays, options.threads);
    for (const auto& row : adj) report.orthogonal_pairs += row.count();
    report.orthogonal_pairs /= 2;

    auto bases = cliques_of_size(adj, n);
    auto maximal = maximal_cliques(adj, 2);
    report.bases = bases.size();
    report.maximal_cliques = maximal.size();
    auto& family = options.mode == EdgeMode::BasesOnly ? bases : maximal;
    if (family.empty()) throw InvalidHypergraph("component set yields no hyperedges in dimension " + std::to_string(n));

    std::vector<std::size_t> edge_component;
    auto sizes = component_sizes(family, rays.size(), edge_component);
    std::size_t chosen = 0;
    for (std::size_t c = 1; c < sizes.size(); ++c)
        if (sizes[c].l > sizes[chosen].l || (sizes[c].l == sizes[chosen].l && sizes[c].k > sizes[chosen].k)) chosen = c;

    std::vector<std::vector<std::uint32_t>> kept;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (options.filter == ComponentFilter::All || edge_component[i] == chosen) kept.push_back(family[i]);

    report.components = sizes;
    std::stable_sort(report.components.begin(), report.components.end(),
                     [](const ComponentSize& a, const ComponentSize& b) { return a.l != b.l ? a.l > b.l : a.k > b.k; });

    // Relabel surviving rays densely in ray order.
    std::vector<std::uint32_t> label(rays.size(), UINT32_MAX);
    for (const auto& e : kept)
        for (auto v : e) label[v] = 0;
    std::vector<std::string> names;
    Coordinatization coords(n);
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (label[r] == UINT32_MAX) continue;
        label[r] = static_cast<std::uint32_t>(names.size());
        names.push_back(vertex_symbol(names.size()));
        coords.set(names.back(), rays[r]);
    }
    std::vector<Edge> edges;
    edges.reserve(kept.size());
    for (const auto& e : kept) {
        Edge ne;
        for (auto v : e) ne.push_back(label[v]);
        edges.push_back(std::move(ne));
    }
    result.mmph = Mmph(std::move(edges), std::move(names));
    result.coords = std::move(coords);
    report.k = result.mmph.vertex_count();
    report.l = result.mmph.edge_count();
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<RingScalar>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        RingScalar inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RingScalar f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(std::span<const RayVector> vectors) {
    if (vectors.empty()) return 0;
    std::vector<std::vector<RingScalar>> m;
    for (const auto& v : vectors) m.push_back(v.components());
    return row_reduce(m, vectors.front().dimension()).size();
}

Ray completion(std::span<const Ray> rays) {
    if (rays.empty()) throw std::invalid_argument("completion needs at least one ray");
    const std::size_t n = rays.front().dimension();
    if (n < 2 || n > 4) throw std::invalid_argument("completion supports dimensions up to 4");
    if (rays.size() != n - 1)
        throw std::invalid_argument("completion needs exactly n-1 = " + std::to_string(n - 1) + " rays");
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (!orthogonal(rays[i], rays[j])) throw std::invalid_argument("completion inputs are not mutually orthogonal");

    // Solve sum_i conj(u_i) x_i = 0 for every input u.
    std::vector<std::vector<RingScalar>> m;
    for (const auto& r : rays) {
        std::vector<RingScalar> row;
        for (const auto& c : r.vector().components()) row.push_back(conjugate(c));
        m.push_back(std::move(row));
    }
    auto pivots = row_reduce(m, n);
    if (pivots.size() != n - 1) throw std::invalid_argument("completion inputs are linearly dependent");
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<RingScalar> x(n, RingScalar(0).promoted(rays.front().ring()));
    x[free_col] = RingScalar(1).promoted(rays.front().ring());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
    return normalize_ray(RayVector(std::move(x)));
}

const char* violation_name(Violation::Kind k) noexcept {
    switch (k) {
    case Violation::Kind::Missing: return "missing";
    case Violation::Kind::NotOrthogonal: return "not_orthogonal";
    case Violation::Kind::Duplicate: return "duplicate";
    case Violation::Kind::NotSpanning: return "not_spanning";
    }
    return "?";
}

VerificationReport verify_coordinatization(const Mmph& h, const Coordinatization& c) {
    VerificationReport report;
    for (const auto& name : h.names())
        if (!c.contains(name)) report.violations.push_back({Violation::Kind::Missing, 0, {name}});

    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        bool complete = true;
        for (VertexId v : e) complete = complete && c.contains(h.name(v));
        if (!complete) continue;
        ++report.edges_checked;
        bool ok = true;
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                if (!orthogonal(*c.find(h.name(e[a])), *c.find(h.name(e[b])))) {
                    ok = false;
                    report.violations.push_back({Violation::Kind::NotOrthogonal, i, {h.name(e[a]), h.name(e[b])}});
                }
            }
        }
        if (ok) ++report.edges_orthogonal;
        if (e.size() == c.dimension()) {
            std::vector<RayVector> vs;
            for (VertexId v : e) vs.push_back(c.find(h.name(v))->vector());
            if (rank(vs) != c.dimension()) report.violations.push_back({Violation::Kind::NotSpanning, i, h.edge_names(i)});
        }
    }

    std::map<Ray, std::string> seen;
    for (const auto& name : h.names()) {
        const Ray* r = c.find(name);
        if (!r) continue;
        auto [it, fresh] = seen.try_emplace(*r, name);
        if (!fresh) report.violations.push_back({Violation::Kind::Duplicate, 0, {it->second, name}});
    }
    report.distinct_rays = seen.size();
    return report;
}

} // namespace mmph
