// Acceptance criteria 1-14. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include "mmph/canonical.hpp"
#include "mmph/catalog.hpp"
#include "mmph/cli.hpp"
#include "mmph/coloring.hpp"
#include "mmph/containment.hpp"
#include "mmph/structure_ops.hpp"
#include "mmph/vector_gen.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace mmph;

namespace {

// Wall-clock ceilings in seconds, per criterion.
constexpr double kLimit[15] = {0, 1, 30, 5, 240, 5, 60, 600, 600, 600, 60, 60, 600, 300, 300};

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    explicit Checker(Outcome& o) : o_(o) {}
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            o_.pass = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
            o_.detail = failures_;
        }
    }

private:
    Outcome& o_;
    std::string failures_;
};

std::string size_of(const Mmph& h) { return std::to_string(h.vertex_count()) + "-" + std::to_string(h.edge_count()); }

Outcome appendix_fidelity() {
    Outcome o;
    Checker c(o);
    auto h = parse_mmph(embedded_69_50_text());
    auto coords = parse_coordinatization(embedded_69_50_coordinates(), h);
    auto s = stats(h);
    c.expect(s.k == 69 && s.l == 50 && s.n == 3, "size " + size_of(h));
    c.expect(s.kappa_histogram == std::map<std::size_t, std::size_t>{{3, 50}}, "not all edges are triads");
    c.expect(coords.uncoordinatized.empty(), "uncoordinatized vertices");
    auto rep = verify_coordinatization(h, coords.coords);
    c.expect(rep.ok(), std::to_string(rep.violations.size()) + " violations");
    c.expect(rep.edges_orthogonal == 50 && rep.distinct_rays == 69, "orthogonal triads / distinct rays mismatch");
    if (o.pass) o.detail = "69-50, 50 orthogonal triads, 69 distinct rays";
    return o;
}

Outcome criticality_69_50() {
    Outcome o;
    Checker c(o);
    auto r = criticality(catalog_get("69-50").mmph);
    c.expect(r.contextual, "not contextual");
    c.expect(r.critical, "not critical");
    c.expect(r.decider_calls == 51, std::to_string(r.decider_calls) + " decider calls");
    if (o.pass) o.detail = "contextual, critical, 51 decider calls";
    return o;
}

Outcome stripping() {
    Outcome o;
    Checker c(o);
    auto s = strip_mult1(catalog_get("69-50").mmph).mmph;
    auto st = stats(s);
    c.expect(st.k == 33 && st.l == 50, "size " + size_of(s));
    c.expect(st.complete_bases == 14, std::to_string(st.complete_bases) + " complete bases");
    c.expect(st.kappa_histogram[2] == 36, std::to_string(st.kappa_histogram[2]) + " dyads");
    bool ctx = is_contextual(s);
    c.expect(ctx, "not contextual");
    auto cls = classify(s, ctx);
    c.expect(cls.kind == Kind::NonKS, "not non-KS");
    c.expect(cls.alias == "KS (Cabello notation)", "alias " + cls.alias);
    if (o.pass) o.detail = "33-50, 14 complete bases, 36 dyads, non-KS (alias KS)";
    return o;
}

Outcome master_counts() {
    Outcome o;
    Checker c(o);
    struct Case {
        const char* comps;
        std::size_t k, l;
    };
    const Case cases[] = {
        {"0,1,-1,2,-2,5", 97, 64},
        {"0,1,-1,r2,-r2,3", 81, 52},
        {"0,w,-w,2w,w2,-w2,2w2", 169, 120},
        {"0,1,-1,2w,w2,-w2,2w2", 157, 100},
    };
    std::string got;
    for (const auto& cs : cases) {
        auto t0 = std::chrono::steady_clock::now();
        auto m = master_from_components(parse_components(cs.comps), 3);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        got += (got.empty() ? "" : ", ") + size_of(m.mmph);
        c.expect(m.mmph.vertex_count() == cs.k && m.mmph.edge_count() == cs.l,
                 std::string("{") + cs.comps + "} gave " + size_of(m.mmph) + ", expected " + std::to_string(cs.k) +
                     "-" + std::to_string(cs.l));
        c.expect(secs < 60, std::string("{") + cs.comps + "} took over 60 s");
    }
    if (o.pass) o.detail = got;
    return o;
}

Outcome yu_oh() {
    Outcome o;
    Checker c(o);
    GenerationOptions opts;
    opts.mode = EdgeMode::AllMaximalCliques;
    auto m = master_from_components(parse_components("0,1,-1"), 3, opts);
    auto st = stats(m.mmph);
    c.expect(st.k == 13 && st.l == 16, "size " + size_of(m.mmph));
    c.expect(st.complete_bases == 4, "complete bases " + std::to_string(st.complete_bases));
    c.expect(st.kappa_histogram[2] == 12, "dyads " + std::to_string(st.kappa_histogram[2]));
    c.expect(is_contextual(m.mmph), "not contextual");
    auto ext = weak_extend(m.mmph, m.coords);
    c.expect(ext.mmph.vertex_count() == 25 && ext.mmph.edge_count() == 16, "extension " + size_of(ext.mmph));
    c.expect(!is_contextual(ext.mmph), "extension is contextual");
    if (o.pass) o.detail = "13-16 (4 bases, 12 dyads) contextual; 25-16 non-contextual";
    return o;
}

Outcome partial_extension() {
    Outcome o;
    Checker c(o);
    const auto& yo = catalog_get("yu-oh-13-16");
    auto results = partial_extension_search(yo.mmph, *yo.coords, 3);
    c.expect(results.size() == 220, std::to_string(results.size()) + " choices");
    std::size_t hits = 0;
    for (const auto& r : results) hits += r.contextual && r.complete_bases == 13;
    c.expect(hits >= 1, "no contextual choice with 13 complete bases");
    if (o.pass) o.detail = std::to_string(hits) + " of 220 choices contextual with 13 complete bases";
    return o;
}

Outcome reduction_uniqueness() {
    Outcome o;
    Checker c(o);
    const auto& master = catalog_get("master-eisenstein-1").mmph;
    const auto& target = catalog_get("69-50").mmph;
    const std::string want = canonical_form(target).certificate;
    auto traces = reduce_trials(master, 0, 50);
    std::set<std::string> certs;
    for (const auto& t : traces) {
        c.expect(t.stats.k == 69 && t.stats.l == 50, "seed " + std::to_string(t.seed) + " ended at " + size_of(t.result));
        certs.insert(canonical_form(t.result).certificate);
    }
    c.expect(certs.size() == 1, std::to_string(certs.size()) + " isomorphism classes");
    c.expect(certs.count(want) == 1, "result not isomorphic to the embedded 69-50");
    if (o.pass)
        o.detail = "50/50 runs on the " + size_of(master) + " master end at one class isomorphic to the embedded 69-50";
    return o;
}

Outcome reduction_spectra() {
    Outcome o;
    Checker c(o);
    std::map<std::string, int> peres, bub;
    for (const auto& t : reduce_trials(catalog_get("master-peres").mmph, 0, 50)) ++peres[size_of(t.result)];
    for (const auto& t : reduce_trials(catalog_get("master-bub").mmph, 0, 50)) ++bub[size_of(t.result)];
    c.expect(peres.size() == 1 && peres.count("57-40"), "81-52 reductions not all 57-40");
    const std::set<std::string> allowed{"49-36", "51-37", "53-38", "54-39", "55-40"};
    for (auto& [size, n] : bub) c.expect(allowed.count(size) == 1, "97-64 reduction ended at " + size);
    std::string seen;
    for (auto& [size, n] : bub) seen += (seen.empty() ? "" : " ") + size + "x" + std::to_string(n);
    if (o.pass) o.detail = "81-52 -> 57-40 x50; 97-64 -> " + seen;
    return o;
}

Outcome bound_169() {
    Outcome o;
    Checker c(o);
    std::size_t max_k = 0, max_l = 0;
    for (const auto& t : reduce_trials(catalog_get("master-eisenstein-w").mmph, 0, 25)) {
        max_k = std::max(max_k, t.stats.k);
        max_l = std::max(max_l, t.stats.l);
        c.expect(t.stats.k <= 106 && t.stats.l <= 79, "seed " + std::to_string(t.seed) + " ended at " + size_of(t.result));
    }
    if (o.pass) o.detail = "25 runs, largest k " + std::to_string(max_k) + ", largest l " + std::to_string(max_l);
    return o;
}

Outcome four_dim() {
    Outcome o;
    Checker c(o);
    auto m = master_from_components(parse_components("0,1,-1"), 4);
    c.expect(m.mmph.vertex_count() == 24 && m.mmph.edge_count() == 24, "master " + size_of(m.mmph));
    std::optional<ReductionTrace> found;
    for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
        auto t = reduce_to_critical(m.mmph, seed);
        if (t.stats.k == 18 && t.stats.l == 9) found = std::move(t);
    }
    c.expect(found.has_value(), "no seed below 200 reduces to 18-9");
    if (!found) return o;
    const Mmph& h18 = found->result;
    Coordinatization c18(4);
    for (const auto& n : h18.names()) c18.set(n, *m.coords.find(n));
    c.expect(is_critical(h18), "18-9 not critical");
    auto h17 = delete_vertex(h18, h18.name(0));
    Coordinatization c17(4);
    for (const auto& n : h17.names()) c17.set(n, *c18.find(n));
    c.expect(h17.vertex_count() == 17 && h17.edge_count() == 9, "deletion gave " + size_of(h17));
    c.expect(is_contextual(h17) && is_critical(h17), "17-9 not contextual and critical");
    auto weak = weak_extend(h17, c17);
    std::size_t ones = 0;
    for (VertexId v = 0; v < weak.mmph.vertex_count(); ++v) ones += weak.mmph.multiplicity(v) == 1;
    c.expect(weak.mmph.vertex_count() == 19 && weak.mmph.edge_count() == 9, "weak extension " + size_of(weak.mmph));
    c.expect(!is_contextual(weak.mmph), "19-9 contextual");
    c.expect(ones == 2, std::to_string(ones) + " multiplicity-1 vertices");
    auto strong = strong_extend(h17, c17);
    c.expect(is_isomorphic(strong.mmph, h18), "strong extension not isomorphic to the 18-9");
    if (o.pass) o.detail = "24-24 -> 18-9 (seed " + std::to_string(found->seed) + ") -> 17-9 -> 19-9; strong ext ~ 18-9";
    return o;
}

Outcome containment() {
    Outcome o;
    Checker c(o);
    for (const auto& name : catalog_names()) {
        const auto& h = catalog_get(name).mmph;
        auto r = is_subhypergraph(h, h);
        c.expect(r.outcome == Containment::Contained && verify_embedding(h, h, *r.embedding), "identity failed for " + name);
    }
    const auto& yo = catalog_get("yu-oh-13-16").mmph;
    c.expect(is_subhypergraph(yo, catalog_get("master-bub").mmph).outcome == Containment::Contained, "13-16 not in 97-64");
    c.expect(is_subhypergraph(yo, catalog_get("master-peres").mmph).outcome == Containment::Contained, "13-16 not in 81-52");
    c.expect(is_subhypergraph(parse_mmph("12,23,31."), parse_mmph("12,23,34,41.")).outcome == Containment::NotContained,
             "triangle found in square");
    if (o.pass) o.detail = "identity for all catalog sets; 13-16 in 97-64 and 81-52; triangle not in square";
    return o;
}

Outcome small_search() {
    Outcome o;
    Checker c(o);
    const auto& h = catalog_get("33-50").mmph;
    SubsetQuery q;
    q.max_k = 8;
    q.max_l = 8;
    q.min_complete_bases = 1;
    q.max_complete_bases = 1;
    q.budget = 10'000'000;
    q.max_results = 1;
    auto one = search_small_contextual(h, q);
    c.expect(!one.hits.empty(), "no hit with exactly one complete basis");
    std::string detail;
    if (!one.hits.empty()) {
        const auto& hit = one.hits[0].mmph;
        c.expect(hit.vertex_count() <= 8 && hit.edge_count() <= 8 && hit.complete_bases() == 1 && is_contextual(hit),
                 "hit violates bounds");
        detail = size_of(hit) + " with 1 complete basis after " + std::to_string(one.nodes) + " nodes";
    }
    SubsetQuery q7;
    q7.max_k = 33;
    q7.max_l = 50;
    q7.max_complete_bases = 7;
    q7.min_complete_bases = 0;
    q7.allow_vertex_deletion = false;
    q7.max_results = 1;
    auto seven = search_small_contextual(h, q7);
    c.expect(!seven.hits.empty(), "no hit with at most 7 complete bases");
    if (!seven.hits.empty()) detail += "; " + size_of(seven.hits[0].mmph) + " with " +
                                       std::to_string(seven.hits[0].mmph.complete_bases()) + " complete bases";
    if (o.pass) o.detail = detail;
    return o;
}

// Connected random sub-hypergraph of h with at most max_k vertices.
Mmph random_sub(const Mmph& h, std::mt19937_64& rng, std::size_t max_k) {
    std::vector<std::size_t> chosen{static_cast<std::size_t>(rng() % h.edge_count())};
    std::set<VertexId> verts(h.edge(chosen[0]).begin(), h.edge(chosen[0]).end());
    std::set<std::size_t> in(chosen.begin(), chosen.end());
    const std::size_t target = 1 + rng() % (2 * max_k);
    for (std::size_t step = 0; step < 4 * target && chosen.size() < target; ++step) {
        auto v = *std::next(verts.begin(), static_cast<long>(rng() % verts.size()));
        const auto& inc = h.incidence()[v];
        std::size_t e = inc[rng() % inc.size()];
        if (in.count(e)) continue;
        std::set<VertexId> grown = verts;
        grown.insert(h.edge(e).begin(), h.edge(e).end());
        if (grown.size() > max_k) continue;
        verts = std::move(grown);
        in.insert(e);
        chosen.push_back(e);
    }
    return edge_subset(h, chosen);
}

Outcome oracle_equivalence() {
    Outcome o;
    Checker c(o);
    std::mt19937_64 rng(13);
    const auto& names = catalog_names();
    int agree = 0, contextual = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& h = catalog_get(names[static_cast<std::size_t>(i) % names.size()]).mmph;
        Mmph sub = random_sub(h, rng, 20);
        auto fast = find_assignment(sub);
        auto slow = brute_force_assignment(sub);
        bool same = fast.has_value() == slow.has_value();
        c.expect(same, "disagreement on " + serialize_mmph(sub, Relabel::Contiguous));
        if (fast) c.expect(verify_assignment(sub, *fast), "bad witness");
        if (slow) c.expect(verify_assignment(sub, *slow), "bad oracle witness");
        agree += same;
        contextual += !fast.has_value();
    }
    if (o.pass) o.detail = std::to_string(agree) + "/1000 agree (" + std::to_string(contextual) + " contextual)";
    return o;
}

Outcome determinism() {
    Outcome o;
    Checker c(o);
    const std::vector<std::vector<std::string>> commands = {
        {"reduce", "@master-bub", "--trials", "8", "--seed", "5"},
        {"reduce", "@24-24", "--trials", "8", "--seed", "0"},
        {"search", "@33-50", "--seed", "3", "--max-results", "4"},
        {"extend", "@yu-oh-13-16", "--mode", "partial", "--keep", "3"},
        {"critical", "@69-50"},
        {"generate", "--components", "0,1,-1,2,-2,5", "--dim", "3"},
        {"export", "@18-9", "--format", "layout3d", "--seed", "7"},
    };
    for (const auto& base : commands) {
        std::string outputs[2];
        int i = 0;
        for (const char* threads : {"1", "8"}) {
            auto args = base;
            args.insert(args.end(), {"--json", "--no-timings", "--threads", threads});
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            c.expect(code == 0, base[0] + " exited " + std::to_string(code) + ": " + err.str());
            outputs[i++] = out.str();
        }
        c.expect(outputs[0] == outputs[1] && !outputs[0].empty(), base[0] + " output differs between 1 and 8 threads");
    }
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical at 1 and 8 threads";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"appendix fidelity", appendix_fidelity},
        {"69-50 contextual and critical", criticality_69_50},
        {"stripping 69-50", stripping},
        {"master generation counts", master_counts},
        {"Yu-Oh pipeline", yu_oh},
        {"partial extension", partial_extension},
        {"reduction uniqueness", reduction_uniqueness},
        {"reduction spectra", reduction_spectra},
        {"169-120 bound check", bound_169},
        {"4D pipeline", four_dim},
        {"containment", containment},
        {"small-set search", small_search},
        {"oracle equivalence", oracle_equivalence},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const std::size_t id = i + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > kLimit[id]) {
            o.pass = false;
            o.detail += " (exceeded " + std::to_string(static_cast<int>(kLimit[id])) + " s)";
        }
        failed += !o.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << ": "
                  << o.detail << " (" << timing << ")" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
