#include "mmph/bitset.hpp"
#include "mmph/canonical.hpp"
#include "mmph/structure_ops.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace mmph {

namespace {

struct StopSearch {};

// Connected edge subsets are enumerated with the ESU scheme on the edge
// adjacency graph (edges adjacent when they share a vertex). Edges are
// renumbered by their seed-shuffled rank; a subset is produced once, from its
// lowest-ranked edge.
class SubsetSearch {
public:
    SubsetSearch(const Mmph& h, const SubsetQuery& q) : h_(h), q_(q), mult_(h.vertex_count(), 0) {
        const std::size_t l = h.edge_count();
        order_.resize(l);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::mt19937_64 rng(q.seed);
        for (std::size_t i = l; i > 1; --i) std::swap(order_[i - 1], order_[rng() % i]);

        std::vector<std::size_t> rank(l);
        for (std::size_t r = 0; r < l; ++r) rank[order_[r]] = r;
        nbr_.assign(l, Bitset(l));
        for (const auto& inc : h.incidence())
            for (auto a : inc)
                for (auto b : inc)
                    if (a != b) nbr_[rank[a]].set(rank[b]);
    }

    SubsetSearchResult run() {
        SubsetSearchResult out;
        const std::size_t l = h_.edge_count();
        try {
            for (std::size_t s = 0; s < l; ++s) {
                std::vector<std::size_t> subset{s};
                if (!within_bounds(subset)) continue;
                Bitset closed = nbr_[s];
                closed.set(s);
                Bitset ext = above(nbr_[s], s);
                extend(subset, closed, ext, s);
            }
            out.exhausted = true;
        } catch (const StopSearch&) {
            out.exhausted = false;
        }
        out.nodes = nodes_;
        for (auto& [cert, hit] : hits_) out.hits.push_back(std::move(hit));
        return out;
    }

private:
    Bitset above(const Bitset& b, std::size_t s) const {
        Bitset out = b;
        for (std::size_t i = 0; i <= s && i < out.size(); ++i) out.reset(i);
        return out;
    }

    void tick() {
        if (++nodes_ > q_.budget) throw StopSearch{};
    }

    void extend(std::vector<std::size_t>& subset, const Bitset& closed, Bitset ext, std::size_t s) {
        tick();
        evaluate(subset);
        if (subset.size() >= q_.max_l) return;
        for (std::size_t w = ext.find_first(); w < ext.size(); w = ext.find_first()) {
            ext.reset(w);
            subset.push_back(w);
            if (within_bounds(subset)) {
                Bitset fresh = above(nbr_[w], s);
                fresh.subtract(closed);
                Bitset next_ext = ext | fresh;
                Bitset next_closed = closed | nbr_[w];
                extend(subset, next_closed, std::move(next_ext), s);
            }
            subset.pop_back();
        }
    }

    // Multiplicities inside the subset; returns the touched vertices.
    std::vector<VertexId> count(const std::vector<std::size_t>& subset) {
        std::vector<VertexId> touched;
        for (auto r : subset)
            for (VertexId v : h_.edge(order_[r]))
                if (mult_[v]++ == 0) touched.push_back(v);
        return touched;
    }

    void uncount(const std::vector<VertexId>& touched) {
        for (VertexId v : touched) mult_[v] = 0;
    }

    // Both lower bounds only grow as edges are added, so failing them prunes
    // every superset.
    bool within_bounds(const std::vector<std::size_t>& subset) {
        auto touched = count(subset);
        std::size_t deletable = 0, forced_bases = 0;
        for (auto r : subset) {
            const Edge& e = h_.edge(order_[r]);
            std::size_t ones = 0;
            for (VertexId v : e) ones += mult_[v] == 1;
            if (q_.allow_vertex_deletion && e.size() > 2) deletable += std::min(ones, e.size() - 2);
            if (e.size() == h_.dimension() && (ones == 0 || !q_.allow_vertex_deletion || e.size() <= 2))
                ++forced_bases;
        }
        uncount(touched);
        return touched.size() - deletable <= q_.max_k && forced_bases <= q_.max_complete_bases;
    }

    void evaluate(const std::vector<std::size_t>& subset) {
        std::vector<std::size_t> host_edges;
        for (auto r : subset) host_edges.push_back(order_[r]);
        std::sort(host_edges.begin(), host_edges.end());
        Mmph base = edge_subset(h_, host_edges);
        std::string cert = canonical_form(base).certificate;
        if (!seen_.insert(cert).second) return;

        // Weakly deletable: multiplicity 1 within the subset, in an edge of size >= 3.
        std::vector<VertexId> candidates;
        if (q_.allow_vertex_deletion)
            for (VertexId v = 0; v < base.vertex_count(); ++v)
                if (base.multiplicity(v) == 1 && base.edge(base.incidence()[v][0]).size() > 2) candidates.push_back(v);
        if (candidates.size() > 20) candidates.resize(20);

        std::vector<std::uint32_t> masks(std::size_t{1} << candidates.size());
        std::iota(masks.begin(), masks.end(), 0U);
        std::stable_sort(masks.begin(), masks.end(),
                         [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        const std::size_t k = base.vertex_count();
        for (auto mask : masks) {
            const std::size_t dels = static_cast<std::size_t>(std::popcount(mask));
            if (k - dels > q_.max_k) continue;
            tick();
            std::vector<char> gone(k, 0);
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (mask >> i & 1U) gone[candidates[i]] = 1;
            auto variant = build_variant(base, gone);
            if (!variant) continue;
            const std::size_t bases = variant->complete_bases();
            if (bases > q_.max_complete_bases || bases < q_.min_complete_bases) continue;
            if (q_.require_contextual && !is_contextual(*variant)) continue;

            SubsetHit hit;
            hit.certificate = canonical_form(*variant).certificate;
            if (hits_.count(hit.certificate)) return;
            hit.mmph = std::move(*variant);
            hit.edges = host_edges;
            for (VertexId v = 0; v < k; ++v)
                if (gone[v]) hit.deleted.push_back(base.name(v));
            hits_.emplace(hit.certificate, std::move(hit));
            if (hits_.size() >= q_.max_results) throw StopSearch{};
            return;
        }
    }

    static std::optional<Mmph> build_variant(const Mmph& base, const std::vector<char>& gone) {
        std::vector<Edge> edges;
        std::set<Edge> keys;
        for (const auto& e : base.edges()) {
            Edge kept;
            for (VertexId v : e)
                if (!gone[v]) kept.push_back(v);
            if (kept.size() < 2) return std::nullopt;
            Edge key = kept;
            std::sort(key.begin(), key.end());
            if (!keys.insert(key).second) return std::nullopt;
            edges.push_back(std::move(kept));
        }
        return Mmph::compacted(edges, base.names());
    }

    const Mmph& h_;
    const SubsetQuery& q_;
    std::vector<std::size_t> order_; // rank -> host edge index
    std::vector<Bitset> nbr_;        // by rank
    std::vector<std::uint16_t> mult_;
    std::uint64_t nodes_ = 0;
    std::set<std::string> seen_;
    std::map<std::string, SubsetHit> hits_;
};

} // namespace

SubsetSearchResult search_small_contextual(const Mmph& h, const SubsetQuery& q) {
    if (h.edge_count() == 0 || q.max_l == 0) return {{}, 0, true};
    return SubsetSearch(h, q).run();
}

} // namespace mmph
