#include "mmph/canonical.hpp"

#include "mmph/errors.hpp"
#include "mmph/mmp_codec.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mmph {

namespace {

using Colors = std::vector<std::uint32_t>;
using Cert = std::vector<std::vector<std::uint32_t>>;

// Incidence graph: nodes [0, k) are vertices, [k, k + l) are hyperedges.
class Canonizer {
public:
    Canonizer(const Mmph& h, std::uint64_t budget) : h_(h), k_(h.vertex_count()), budget_(budget) {
        const std::size_t total = k_ + h.edge_count();
        adj_.resize(total);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            for (VertexId v : h.edge(i)) {
                adj_[v].push_back(static_cast<std::uint32_t>(k_ + i));
                adj_[k_ + i].push_back(v);
            }
        }
    }

    CanonicalForm run() {
        Colors colors(adj_.size(), 0);
        for (std::size_t i = k_; i < adj_.size(); ++i) colors[i] = 1;
        refine(colors);
        std::vector<VertexId> path;
        search(colors, path);

        CanonicalForm out;
        out.labeling = best_labeling_;
        out.nodes = nodes_;
        out.automorphisms_found = automorphisms_.size();
        std::vector<std::string> names(k_);
        for (std::size_t i = 0; i < k_; ++i) names[i] = vertex_symbol(i);
        std::vector<Edge> edges;
        for (const auto& e : best_cert_) edges.emplace_back(e.begin(), e.end());
        out.mmph = k_ == 0 ? Mmph{} : Mmph(std::move(edges), std::move(names));
        out.certificate = std::to_string(k_) + "-" + std::to_string(best_cert_.size()) + ":";
        for (std::size_t i = 0; i < best_cert_.size(); ++i) {
            if (i) out.certificate += ',';
            for (std::size_t j = 0; j < best_cert_[i].size(); ++j) {
                if (j) out.certificate += '.';
                out.certificate += std::to_string(best_cert_[i][j] + 1);
            }
        }
        return out;
    }

private:
    // Splits colour classes by the multiset of neighbour colours until stable.
    // New colours are ranks of (old colour, neighbour multiset), so the result
    // depends only on the current colouring, never on node numbering.
    void refine(Colors& colors) const {
        const std::size_t total = adj_.size();
        std::size_t classes = count_classes(colors);
        std::vector<std::vector<std::uint32_t>> sig(total);
        std::vector<std::uint32_t> order(total);
        while (true) {
            for (std::size_t i = 0; i < total; ++i) {
                auto& s = sig[i];
                s.clear();
                s.push_back(colors[i]);
                for (auto j : adj_[i]) s.push_back(colors[j]);
                std::sort(s.begin() + 1, s.end());
            }
            std::iota(order.begin(), order.end(), 0U);
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
            std::uint32_t rank = 0;
            for (std::size_t i = 0; i < total; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
                colors[order[i]] = rank;
            }
            std::size_t now = total == 0 ? 0 : rank + 1;
            if (now == classes) return;
            classes = now;
        }
    }

    static std::size_t count_classes(const Colors& colors) {
        std::set<std::uint32_t> s(colors.begin(), colors.end());
        return s.size();
    }

    void search(const Colors& colors, std::vector<VertexId>& path) {
        if (++nodes_ > budget_) throw BudgetExceeded("canonical labeling exceeded its node budget");

        // Target cell: lowest colour shared by more than one vertex.
        std::vector<std::uint32_t> counts(adj_.size(), 0);
        for (std::size_t v = 0; v < k_; ++v) ++counts[colors[v]];
        std::uint32_t target = UINT32_MAX;
        for (std::size_t v = 0; v < k_; ++v)
            if (counts[colors[v]] > 1 && colors[v] < target) target = colors[v];
        if (target == UINT32_MAX) {
            leaf(colors);
            return;
        }
        std::vector<VertexId> cell;
        for (std::size_t v = 0; v < k_; ++v)
            if (colors[v] == target) cell.push_back(static_cast<VertexId>(v));

        std::vector<VertexId> explored;
        for (VertexId x : cell) {
            if (equivalent_to_explored(x, explored, path)) continue;
            explored.push_back(x);
            Colors child = colors;
            // Individualize x: it keeps a colour strictly below the rest of its cell.
            for (auto& c : child) c *= 2;
            for (VertexId y : cell)
                if (y != x) child[y] += 1;
            refine(child);
            path.push_back(x);
            search(child, path);
            path.pop_back();
        }
    }

    // x is skipped when an automorphism fixing the current path pointwise maps
    // an already explored sibling onto it.
    bool equivalent_to_explored(VertexId x, const std::vector<VertexId>& explored,
                                const std::vector<VertexId>& path) const {
        if (explored.empty() || automorphisms_.empty()) return false;
        std::vector<VertexId> parent(k_);
        std::iota(parent.begin(), parent.end(), VertexId{0});
        auto root = [&](VertexId a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& g : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](VertexId p) { return g[p] == p; });
            if (!fixes) continue;
            for (std::size_t v = 0; v < k_; ++v) parent[root(static_cast<VertexId>(v))] = root(g[v]);
        }
        VertexId rx = root(x);
        return std::any_of(explored.begin(), explored.end(), [&](VertexId y) { return root(y) == rx; });
    }

    void leaf(const Colors& colors) {
        // Vertex colours are 0..k-1 here because vertices start below edges.
        std::vector<VertexId> labeling(k_);
        for (std::size_t v = 0; v < k_; ++v) labeling[v] = colors[v];
        Cert cert;
        cert.reserve(h_.edge_count());
        for (const auto& e : h_.edges()) {
            std::vector<std::uint32_t> le;
            for (VertexId v : e) le.push_back(labeling[v]);
            std::sort(le.begin(), le.end());
            cert.push_back(std::move(le));
        }
        std::sort(cert.begin(), cert.end());

        if (!have_best_) {
            have_best_ = true;
            best_cert_ = cert;
            best_labeling_ = labeling;
            first_cert_ = std::move(cert);
            first_labeling_ = std::move(labeling);
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(first_labeling_, labeling);
        } else if (cert == best_cert_) {
            record_automorphism(best_labeling_, labeling);
        } else if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_labeling_ = std::move(labeling);
        }
    }

    // g(v) = other^-1(this(v)) maps the graph onto itself.
    void record_automorphism(const std::vector<VertexId>& other, const std::vector<VertexId>& labeling) {
        std::vector<VertexId> inverse(k_);
        for (std::size_t v = 0; v < k_; ++v) inverse[other[v]] = static_cast<VertexId>(v);
        std::vector<VertexId> g(k_);
        for (std::size_t v = 0; v < k_; ++v) g[v] = inverse[labeling[v]];
        automorphisms_.push_back(std::move(g));
    }

    const Mmph& h_;
    std::size_t k_;
    std::uint64_t budget_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint64_t nodes_ = 0;
    bool have_best_ = false;
    Cert best_cert_, first_cert_;
    std::vector<VertexId> best_labeling_, first_labeling_;
    std::vector<std::vector<VertexId>> automorphisms_;
};

} // namespace

CanonicalForm canonical_form(const Mmph& h, const CanonicalOptions& options) {
    return Canonizer(h, options.node_budget).run();
}

std::optional<std::vector<VertexId>> find_isomorphism(const Mmph& a, const Mmph& b, const CanonicalOptions& options) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    auto ca = canonical_form(a, options);
    auto cb = canonical_form(b, options);
    if (ca.certificate != cb.certificate) return std::nullopt;
    std::vector<VertexId> b_of_label(b.vertex_count());
    for (std::size_t v = 0; v < b.vertex_count(); ++v) b_of_label[cb.labeling[v]] = static_cast<VertexId>(v);
    std::vector<VertexId> map(a.vertex_count());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) map[v] = b_of_label[ca.labeling[v]];
    return map;
}

bool is_isomorphic(const Mmph& a, const Mmph& b, const CanonicalOptions& options) {
    return find_isomorphism(a, b, options).has_value();
}

bool verify_isomorphism(const Mmph& a, const Mmph& b, const std::vector<VertexId>& map) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (map.size() != a.vertex_count()) return false;
    std::vector<char> hit(b.vertex_count(), 0);
    for (VertexId v : map) {
        if (v >= b.vertex_count() || hit[v]) return false;
        hit[v] = 1;
    }
    std::set<Edge> target;
    for (const auto& e : b.edges()) {
        Edge s = e;
        std::sort(s.begin(), s.end());
        target.insert(std::move(s));
    }
    for (const auto& e : a.edges()) {
        Edge img;
        for (VertexId v : e) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
    }
    return true;
}

} // namespace mmph
