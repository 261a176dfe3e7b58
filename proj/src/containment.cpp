#include "mmph/containment.hpp"

#include "mmph/bitset.hpp"

#include <algorithm>
#include <numeric>

namespace mmph {

const char* containment_name(Containment c) noexcept {
    switch (c) {
    case Containment::Contained: return "contained";
    case Containment::NotContained: return "none";
    case Containment::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

struct OutOfBudget {};

struct Profile {
    std::vector<Bitset> neighbours;      // 2-section adjacency
    std::vector<Bitset> incident;        // vertex -> incident edges
    std::vector<std::size_t> degree;     // 2-section degree
    std::vector<std::size_t> widest;     // largest incident edge
};

Profile profile(const Mmph& h) {
    Profile p;
    const std::size_t k = h.vertex_count();
    p.neighbours.assign(k, Bitset(k));
    p.incident.assign(k, Bitset(h.edge_count()));
    p.widest.assign(k, 0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        for (VertexId a : e) {
            p.incident[a].set(i);
            p.widest[a] = std::max(p.widest[a], e.size());
            for (VertexId b : e)
                if (a != b) p.neighbours[a].set(b);
        }
    }
    for (std::size_t v = 0; v < k; ++v) p.degree.push_back(p.neighbours[v].count());
    return p;
}

class Embedder {
public:
    Embedder(const Mmph& s, const Mmph& l, std::uint64_t budget)
        : s_(s), l_(l), sp_(profile(s)), lp_(profile(l)), budget_(budget), map_(s.vertex_count(), kUnset),
          used_(l.vertex_count()) {
        const std::size_t k = s.vertex_count();
        base_.assign(k, Bitset(l.vertex_count()));
        for (std::size_t v = 0; v < k; ++v)
            for (std::size_t w = 0; w < l.vertex_count(); ++w)
                if (lp_.degree[w] >= sp_.degree[v] && lp_.widest[w] >= sp_.widest[v]) base_[v].set(w);
        order_ = visit_order();
    }

    ContainmentResult run() {
        ContainmentResult out;
        for (const auto& b : base_)
            if (b.none()) {
                out.outcome = Containment::NotContained;
                return out;
            }
        try {
            bool found = place(0);
            out.outcome = found ? Containment::Contained : Containment::NotContained;
            if (found) out.embedding = Embedding{map_};
        } catch (const OutOfBudget&) {
            out.outcome = Containment::Indeterminate;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    static constexpr VertexId kUnset = UINT32_MAX;

    // Greedy order: next vertex has the most already-ordered neighbours, ties
    // by larger degree, then lower id.
    std::vector<VertexId> visit_order() const {
        const std::size_t k = s_.vertex_count();
        std::vector<VertexId> order;
        std::vector<char> done(k, 0);
        std::vector<std::size_t> links(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            VertexId best = kUnset;
            for (VertexId v = 0; v < k; ++v) {
                if (done[v]) continue;
                if (best == kUnset || links[v] > links[best] ||
                    (links[v] == links[best] && sp_.degree[v] > sp_.degree[best]))
                    best = v;
            }
            done[best] = 1;
            order.push_back(best);
            sp_.neighbours[best].for_each([&](std::size_t u) { ++links[u]; });
        }
        return order;
    }

    bool consistent(VertexId v) const {
        for (std::size_t ei : s_.incidence()[v]) {
            const Edge& e = s_.edge(ei);
            Bitset common = lp_.incident[map_[v]];
            for (VertexId u : e) {
                if (u == v || map_[u] == kUnset) continue;
                common &= lp_.incident[map_[u]];
            }
            bool fits = false;
            common.for_each([&](std::size_t li) { fits = fits || l_.edge(li).size() >= e.size(); });
            if (!fits) return false;
        }
        return true;
    }

    bool place(std::size_t depth) {
        if (depth == order_.size()) return true;
        if (++nodes_ > budget_) throw OutOfBudget{};
        const VertexId v = order_[depth];
        Bitset cand = base_[v];
        cand.subtract(used_);
        sp_.neighbours[v].for_each([&](std::size_t u) {
            if (map_[u] != kUnset) cand &= lp_.neighbours[map_[u]];
        });
        for (std::size_t w = cand.find_first(); w < cand.size(); w = cand.find_next(w + 1)) {
            map_[v] = static_cast<VertexId>(w);
            if (consistent(v)) {
                used_.set(w);
                if (place(depth + 1)) return true;
                used_.reset(w);
            }
            map_[v] = kUnset;
        }
        return false;
    }

    const Mmph& s_;
    const Mmph& l_;
    Profile sp_, lp_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexId> map_;
    Bitset used_;
    std::vector<Bitset> base_;
    std::vector<VertexId> order_;
};

} // namespace

ContainmentResult is_subhypergraph(const Mmph& small, const Mmph& large, const ContainmentOptions& options) {
    if (small.vertex_count() > large.vertex_count()) return {Containment::NotContained, std::nullopt, 0};
    if (small.vertex_count() == 0) return {Containment::Contained, Embedding{}, 0};
    auto result = Embedder(small, large, options.node_budget).run();
    if (result.embedding && !verify_embedding(small, large, *result.embedding))
        throw std::logic_error("containment search produced an invalid embedding");
    return result;
}

bool verify_embedding(const Mmph& small, const Mmph& large, const Embedding& e) {
    if (e.map.size() != small.vertex_count()) return false;
    std::vector<char> hit(large.vertex_count(), 0);
    for (VertexId w : e.map) {
        if (w >= large.vertex_count() || hit[w]) return false;
        hit[w] = 1;
    }
    for (const auto& edge : small.edges()) {
        bool inside = std::any_of(large.edges().begin(), large.edges().end(), [&](const Edge& big) {
            return std::all_of(edge.begin(), edge.end(), [&](VertexId v) {
                return std::find(big.begin(), big.end(), e.map[v]) != big.end();
            });
        });
        if (!inside) return false;
    }
    return true;
}

} // namespace mmph
