#include "mmph/coloring.hpp"

#include "mmph/errors.hpp"
#include "mmph/mmp_codec.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace mmph {

bool verify_assignment(const Mmph& h, const Assignment& a) {
    if (a.size() != h.vertex_count()) return false;
    for (const auto& e : h.edges()) {
        std::size_t count = 0;
        for (VertexId v : e) count += a[v] ? 1 : 0;
        if (count != 1) return false;
    }
    return true;
}

std::vector<std::string> ones(const Mmph& h, const Assignment& a) {
    std::vector<std::string> out;
    for (VertexId v = 0; v < a.size(); ++v)
        if (a[v]) out.push_back(h.name(v));
    return out;
}

namespace {

// Knuth's dancing links over a toroidal node list. Node 0 is the root,
// nodes 1..l are column headers, the rest are row cells.
class ExactCover {
public:
    ExactCover(const Mmph& h, std::uint64_t budget) : budget_(budget) {
        const std::size_t l = h.edge_count();
        std::size_t cells = 0;
        for (const auto& e : h.edges()) cells += e.size();
        const std::size_t total = 1 + l + cells;
        left_.resize(total);
        right_.resize(total);
        up_.resize(total);
        down_.resize(total);
        column_.resize(total);
        row_.resize(total);
        size_.assign(l + 1, 0);

        for (std::size_t c = 0; c <= l; ++c) {
            left_[c] = c == 0 ? l : c - 1;
            right_[c] = c == l ? 0 : c + 1;
            up_[c] = down_[c] = c;
            column_[c] = c;
        }

        std::vector<VertexId> order(h.vertex_count());
        std::iota(order.begin(), order.end(), VertexId{0});
        auto rank = [&](VertexId v) {
            const auto& n = h.name(v);
            auto idx = n.size() == 1 ? alphabet_index(n[0]) : std::nullopt;
            return std::pair{idx.value_or(mmp_alphabet().size()), v};
        };
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return rank(a) < rank(b); });

        std::size_t next = l + 1;
        for (VertexId v : order) {
            std::size_t first = 0;
            for (std::size_t edge : h.incidence()[v]) {
                std::size_t c = edge + 1;
                std::size_t node = next++;
                column_[node] = c;
                row_[node] = v;
                up_[node] = up_[c];
                down_[node] = c;
                down_[up_[c]] = node;
                up_[c] = node;
                ++size_[c];
                if (first == 0) {
                    first = node;
                    left_[node] = right_[node] = node;
                } else {
                    left_[node] = left_[first];
                    right_[node] = first;
                    right_[left_[first]] = node;
                    left_[first] = node;
                }
            }
        }
        vertex_count_ = h.vertex_count();
    }

    // Returns true when a cover was found; `stopped()` reports budget exhaustion.
    bool solve() { return search(); }

    bool stopped() const noexcept { return stopped_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

    Assignment assignment() const {
        Assignment a(vertex_count_, 0);
        for (std::size_t node : solution_) a[row_[node]] = 1;
        return a;
    }

private:
    void cover(std::size_t c) {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (std::size_t i = down_[c]; i != c; i = down_[i]) {
            for (std::size_t j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[column_[j]];
            }
        }
    }

    void uncover(std::size_t c) {
        for (std::size_t i = up_[c]; i != c; i = up_[i]) {
            for (std::size_t j = left_[i]; j != i; j = left_[j]) {
                ++size_[column_[j]];
                down_[up_[j]] = j;
                up_[down_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    bool search() {
        ++nodes_;
        if (budget_ != 0 && nodes_ > budget_) {
            stopped_ = true;
            return false;
        }
        if (right_[0] == 0) return true;
        std::size_t best = right_[0];
        for (std::size_t c = right_[best]; c != 0; c = right_[c])
            if (size_[c] < size_[best]) best = c;
        if (size_[best] == 0) return false;

        cover(best);
        for (std::size_t r = down_[best]; r != best; r = down_[r]) {
            solution_.push_back(r);
            for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
            if (search()) return true;
            for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
            solution_.pop_back();
            if (stopped_) break;
        }
        uncover(best);
        return false;
    }

    std::vector<std::size_t> left_, right_, up_, down_, column_;
    std::vector<VertexId> row_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> solution_;
    std::size_t vertex_count_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

} // namespace

DecideResult decide(const Mmph& h, const DecideOptions& options) {
    auto start = std::chrono::steady_clock::now();
    DecideResult result;
    if (h.edge_count() == 0) {
        result.verdict = Verdict::NonContextual;
        result.witness = Assignment(h.vertex_count(), 0);
    } else {
        ExactCover dlx(h, options.node_budget);
        bool found = dlx.solve();
        result.nodes = dlx.nodes();
        if (found) {
            result.verdict = Verdict::NonContextual;
            result.witness = dlx.assignment();
        } else {
            result.verdict = dlx.stopped() ? Verdict::Indeterminate : Verdict::Contextual;
        }
    }
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::optional<Assignment> find_assignment(const Mmph& h) { return decide(h).witness; }

bool is_contextual(const Mmph& h) { return decide(h).verdict == Verdict::Contextual; }

std::optional<Assignment> brute_force_assignment(const Mmph& h) {
    const std::size_t k = h.vertex_count();
    if (k > kBruteForceMaxVertices)
        throw std::invalid_argument("brute force needs k <= " + std::to_string(kBruteForceMaxVertices) + ", got " +
                                    std::to_string(k));
    std::vector<std::uint32_t> masks;
    masks.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for (VertexId v : e) m |= std::uint32_t{1} << v;
        masks.push_back(m);
    }
    const std::uint32_t end = std::uint32_t{1} << k;
    for (std::uint32_t x = 0; x < end; ++x) {
        bool ok = true;
        for (std::uint32_t m : masks) {
            if (std::popcount(x & m) != 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Assignment a(k, 0);
        for (std::size_t v = 0; v < k; ++v) a[v] = (x >> v) & 1U;
        return a;
    }
    return std::nullopt;
}

Classification classify(const Mmph& h, bool contextual) {
    if (!contextual) return {Kind::NonContextual, "non-contextual", "non-contextual"};
    bool all_complete = h.complete_bases() == h.edge_count();
    if (all_complete) return {Kind::KS, "KS", "extended KS (Cabello notation)"};
    return {Kind::NonKS, "non-KS", "KS (Cabello notation)"};
}

Classification classify(const Mmph& h) { return classify(h, is_contextual(h)); }

} // namespace mmph
