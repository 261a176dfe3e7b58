#include "mmph/cli.hpp"

#include "mmph/canonical.hpp"
#include "mmph/catalog.hpp"
#include "mmph/coloring.hpp"
#include "mmph/containment.hpp"
#include "mmph/errors.hpp"
#include "mmph/export.hpp"
#include "mmph/parallel.hpp"
#include "mmph/structure_ops.hpp"
#include "mmph/vector_gen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mmph::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    bool no_timings = false;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    std::string convention = "pavicic";

    std::vector<std::string> inputs;
    std::string input;
    std::string out_path;
    std::string coords_path;
    std::string coords_out_path;
    std::string vertex;
    std::uint64_t budget = 0;

    std::string relabel = "preserve";
    std::string mode = "weak";
    std::size_t keep = 3;
    std::string components;
    std::size_t dim = 3;
    std::string edges = "bases";
    bool all_components = false;
    std::size_t trials = 1;

    SubsetQuery query;
    bool no_deletion = false;

    std::string catalog_action;
    std::string catalog_name;
    bool with_coords = false;

    std::string format = "json";
    std::string obj_path;
    std::size_t iterations = 300;
};

class Clock {
public:
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Input {
    Mmph mmph;
    std::optional<Coordinatization> coords;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load(const std::string& source, const Options& o) {
    Input in;
    if (!source.empty() && source[0] == '@') {
        const auto& e = catalog_get(source.substr(1));
        in.mmph = e.mmph;
        in.coords = e.coords;
    } else {
        std::string text = read_file(source);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{' && text.find('=') == std::string::npos) {
            Coordinatization c;
            in.mmph = from_json(Json::parse(text), &c);
            if (c.size()) in.coords = std::move(c);
        } else {
            auto doc = parse_document(text);
            in.mmph = std::move(doc.mmph);
            in.coords = std::move(doc.coords);
        }
    }
    if (!o.coords_path.empty()) in.coords = parse_coordinatization(read_file(o.coords_path), in.mmph).coords;
    return in;
}

const Coordinatization& need_coords(const Input& in) {
    if (!in.coords) throw std::invalid_argument("this command needs a coordinatization (--coords FILE)");
    return *in.coords;
}

Json mmp_or_null(const Mmph& h, Relabel mode = Relabel::PreserveSymbols) {
    try {
        return serialize_mmph(h, mode);
    } catch (const std::exception&) {
        return nullptr; // more vertices than MMP symbols
    }
}

Json describe(const Mmph& h) {
    Json j;
    j["k"] = h.vertex_count();
    j["l"] = h.edge_count();
    j["n"] = h.dimension();
    j["complete_bases"] = h.complete_bases();
    j["mmp"] = mmp_or_null(h);
    return j;
}

Json histogram(const std::map<std::size_t, std::size_t>& m) {
    Json j = Json::object();
    for (auto [key, count] : m) j[std::to_string(key)] = count;
    return j;
}

void save(const Options& o, const Mmph& h, const Coordinatization* c) {
    if (!o.out_path.empty()) {
        if (ends_with(o.out_path, ".json"))
            write_file(o.out_path, to_json(h, c).dump(2) + "\n");
        else
            write_file(o.out_path, serialize_mmph(h) + "\n");
    }
    if (!o.coords_out_path.empty()) {
        if (!c) throw std::invalid_argument("no coordinatization to write");
        write_file(o.coords_out_path, serialize_coordinatization(h, *c));
    }
}

void timing(Json& j, const Options& o, const Clock& clock) {
    if (!o.no_timings) j["millis"] = std::round(clock.millis() * 1000.0) / 1000.0;
}

Classification classify_with(const Mmph& h, bool contextual, const Options& o) {
    auto c = classify(h, contextual);
    if (o.convention == "cabello") std::swap(c.name, c.alias);
    return c;
}

int cmd_parse(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    r = describe(in.mmph);
    r["mmp"] = mmp_or_null(in.mmph, o.relabel == "contiguous" ? Relabel::Contiguous : Relabel::PreserveSymbols);
    r["coordinatized"] = in.coords ? in.coords->size() : 0;
    save(o, in.mmph, in.coords ? &*in.coords : nullptr);
    return kExitOk;
}

int cmd_stats(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    auto s = stats(in.mmph);
    r["k"] = s.k;
    r["l"] = s.l;
    r["n"] = s.n;
    r["kappa_histogram"] = histogram(s.kappa_histogram);
    r["multiplicity_histogram"] = histogram(s.multiplicity_histogram);
    r["complete_bases"] = s.complete_bases;
    Json edges = Json::array();
    for (std::size_t i = 0; i < in.mmph.edge_count(); ++i) edges.push_back(in.mmph.edge_names(i));
    r["edges"] = std::move(edges);
    return kExitOk;
}

int cmd_check(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    Clock clock;
    auto d = decide(in.mmph, DecideOptions{o.budget});
    if (d.verdict == Verdict::Indeterminate) {
        r["contextual"] = "indeterminate";
        r["nodes"] = d.nodes;
        timing(r, o, clock);
        return kExitIndeterminate;
    }
    bool contextual = d.verdict == Verdict::Contextual;
    auto c = classify_with(in.mmph, contextual, o);
    r["contextual"] = contextual;
    r["classification"] = c.name;
    r["alias"] = c.alias;
    r["witness"] = d.witness ? Json(ones(in.mmph, *d.witness)) : Json(nullptr);
    r["nodes"] = d.nodes;
    timing(r, o, clock);
    return kExitOk;
}

int cmd_critical(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    Clock clock;
    auto c = criticality(in.mmph, o.threads);
    r["contextual"] = c.contextual;
    r["critical"] = c.critical;
    r["removable_edges"] = c.removable_edges;
    r["decider_calls"] = c.decider_calls;
    r["nodes"] = c.nodes;
    timing(r, o, clock);
    return kExitOk;
}

Coordinatization restrict_coords(const Coordinatization& c, const Mmph& h) {
    Coordinatization out(c.dimension());
    for (const auto& n : h.names())
        if (const Ray* ray = c.find(n)) out.set(n, *ray);
    return out;
}

int cmd_strip(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    auto s = strip_mult1(in.mmph);
    r = describe(s.mmph);
    r["stripped"] = s.stripped;
    r["dropped_edges"] = s.dropped_edges;
    r["warnings"] = s.warnings;
    std::optional<Coordinatization> c;
    if (in.coords) c = restrict_coords(*in.coords, s.mmph);
    save(o, s.mmph, c ? &*c : nullptr);
    return kExitOk;
}

int cmd_delete(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    auto h = delete_vertex(in.mmph, o.vertex);
    r = describe(h);
    r["deleted"] = o.vertex;
    std::optional<Coordinatization> c;
    if (in.coords) c = restrict_coords(*in.coords, h);
    save(o, h, c ? &*c : nullptr);
    return kExitOk;
}

int cmd_extend(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    const auto& c = need_coords(in);
    if (o.mode == "partial") {
        Clock clock;
        auto results = partial_extension_search(in.mmph, c, o.keep, o.threads);
        r["keep"] = o.keep;
        r["choices"] = results.size();
        Json list = Json::array();
        std::map<std::size_t, std::size_t> contextual_by_bases;
        std::size_t contextual = 0;
        for (const auto& pe : results) {
            Json item;
            item["kept_edges"] = pe.kept_deficient;
            item["k"] = pe.mmph.vertex_count();
            item["l"] = pe.mmph.edge_count();
            item["contextual"] = pe.contextual;
            item["complete_bases"] = pe.complete_bases;
            list.push_back(std::move(item));
            if (pe.contextual) {
                ++contextual;
                ++contextual_by_bases[pe.complete_bases];
            }
        }
        r["contextual_choices"] = contextual;
        r["contextual_by_complete_bases"] = histogram(contextual_by_bases);
        r["results"] = std::move(list);
        timing(r, o, clock);
        return kExitOk;
    }
    Extension ext;
    if (o.mode == "weak")
        ext = weak_extend(in.mmph, c);
    else if (o.mode == "strong")
        ext = strong_extend(in.mmph, c);
    else
        throw std::invalid_argument("unknown extension mode '" + o.mode + "'");
    r = describe(ext.mmph);
    r["contextual"] = is_contextual(ext.mmph);
    r["added"] = ext.added;
    r["merged"] = ext.merged;
    r["warnings"] = ext.warnings;
    save(o, ext.mmph, &ext.coords);
    return kExitOk;
}

int cmd_generate(const Options& o, Json& r) {
    Clock clock;
    GenerationOptions g;
    if (o.edges == "bases")
        g.mode = EdgeMode::BasesOnly;
    else if (o.edges == "maximal")
        g.mode = EdgeMode::AllMaximalCliques;
    else
        throw std::invalid_argument("--edges must be bases or maximal");
    g.filter = o.all_components ? ComponentFilter::All : ComponentFilter::Largest;
    g.threads = o.threads;
    auto m = master_from_components(parse_components(o.components), o.dim, g);
    r = describe(m.mmph);
    r["tuples"] = m.report.tuples;
    r["rays"] = m.report.rays;
    r["orthogonal_pairs"] = m.report.orthogonal_pairs;
    r["bases"] = m.report.bases;
    r["maximal_cliques"] = m.report.maximal_cliques;
    Json comps = Json::array();
    for (const auto& cs : m.report.components) comps.push_back(std::to_string(cs.k) + "-" + std::to_string(cs.l));
    r["components"] = std::move(comps);
    timing(r, o, clock);
    save(o, m.mmph, &m.coords);
    return kExitOk;
}

int cmd_reduce(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    Clock clock;
    auto traces = reduce_trials(in.mmph, o.seed, o.trials, o.threads);
    r["seed"] = o.seed;
    r["trials"] = o.trials;
    std::map<std::string, std::size_t> sizes;
    Json list = Json::array();
    for (const auto& t : traces) {
        Json item;
        item["seed"] = t.seed;
        item["k"] = t.stats.k;
        item["l"] = t.stats.l;
        item["complete_bases"] = t.stats.complete_bases;
        item["removed"] = t.removed.size();
        item["decider_calls"] = t.decider_calls;
        item["mmp"] = mmp_or_null(t.result);
        list.push_back(std::move(item));
        ++sizes[std::to_string(t.stats.k) + "-" + std::to_string(t.stats.l)];
    }
    Json hist = Json::object();
    for (auto& [key, n] : sizes) hist[key] = n;
    r["sizes"] = std::move(hist);
    r["results"] = std::move(list);
    timing(r, o, clock);
    if (!traces.empty()) {
        std::optional<Coordinatization> c;
        if (in.coords) c = restrict_coords(*in.coords, traces.front().result);
        save(o, traces.front().result, c ? &*c : nullptr);
    }
    return kExitOk;
}

int cmd_search(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    Clock clock;
    SubsetQuery q = o.query;
    q.seed = o.seed;
    q.allow_vertex_deletion = !o.no_deletion;
    auto res = search_small_contextual(in.mmph, q);
    r["seed"] = o.seed;
    r["nodes"] = res.nodes;
    r["exhausted"] = res.exhausted;
    Json hits = Json::array();
    for (const auto& hit : res.hits) {
        Json item = describe(hit.mmph);
        item["certificate"] = hit.certificate;
        item["edges"] = hit.edges;
        item["deleted"] = hit.deleted;
        hits.push_back(std::move(item));
    }
    r["hits"] = std::move(hits);
    timing(r, o, clock);
    if (!res.hits.empty()) save(o, res.hits.front().mmph, nullptr);
    return res.hits.empty() && !res.exhausted ? kExitIndeterminate : kExitOk;
}

int cmd_contains(const Options& o, Json& r) {
    auto a = load(o.inputs.at(0), o);
    auto b = load(o.inputs.at(1), o);
    Clock clock;
    ContainmentOptions opts;
    if (o.budget) opts.node_budget = o.budget;
    auto res = is_subhypergraph(a.mmph, b.mmph, opts);
    if (res.outcome == Containment::Indeterminate)
        r["contained"] = "indeterminate";
    else
        r["contained"] = res.outcome == Containment::Contained;
    if (res.embedding) {
        Json map = Json::object();
        for (VertexId v = 0; v < a.mmph.vertex_count(); ++v) map[a.mmph.name(v)] = b.mmph.name(res.embedding->map[v]);
        r["mapping"] = std::move(map);
    } else {
        r["mapping"] = nullptr;
    }
    r["nodes"] = res.nodes;
    timing(r, o, clock);
    return res.outcome == Containment::Indeterminate ? kExitIndeterminate : kExitOk;
}

int cmd_iso(const Options& o, Json& r) {
    auto a = load(o.inputs.at(0), o);
    auto b = load(o.inputs.at(1), o);
    auto ca = canonical_form(a.mmph);
    auto cb = canonical_form(b.mmph);
    auto map = find_isomorphism(a.mmph, b.mmph);
    r["isomorphic"] = map.has_value();
    if (map) {
        Json m = Json::object();
        for (VertexId v = 0; v < a.mmph.vertex_count(); ++v) m[a.mmph.name(v)] = b.mmph.name((*map)[v]);
        r["mapping"] = std::move(m);
    } else {
        r["mapping"] = nullptr;
    }
    r["certificate_a"] = ca.certificate;
    r["certificate_b"] = cb.certificate;
    return kExitOk;
}

int cmd_verify(const Options& o, Json& r) {
    auto in = load(o.inputs.at(0), o);
    auto rep = verify_coordinatization(in.mmph, need_coords(in));
    r["ok"] = rep.ok();
    r["edges_checked"] = rep.edges_checked;
    r["edges_orthogonal"] = rep.edges_orthogonal;
    r["distinct_rays"] = rep.distinct_rays;
    Json vs = Json::array();
    for (const auto& v : rep.violations) {
        Json item;
        item["kind"] = violation_name(v.kind);
        item["edge"] = v.edge;
        item["vertices"] = v.vertices;
        vs.push_back(std::move(item));
    }
    r["violations"] = std::move(vs);
    return kExitOk;
}

int cmd_catalog(const Options& o, Json& r) {
    if (o.catalog_action == "list") {
        r["entries"] = catalog_names();
        return kExitOk;
    }
    if (o.catalog_action != "show") throw std::invalid_argument("catalog action must be list or show");
    if (o.catalog_name.empty()) throw std::invalid_argument("catalog show needs a NAME");
    const auto& e = catalog_get(o.catalog_name);
    r["name"] = e.name;
    r["provenance"] = e.provenance == Provenance::Embedded ? "embedded" : "derived";
    r["recipe"] = e.recipe;
    r["description"] = e.description;
    Json d = describe(e.mmph);
    for (auto& [key, value] : d.items()) r[key] = value;
    if (o.with_coords && e.coords) {
        Json c = Json::object();
        for (const auto& n : e.mmph.names()) c[n] = format_ray(*e.coords->find(n));
        r["coordinates"] = std::move(c);
    }
    save(o, e.mmph, e.coords ? &*e.coords : nullptr);
    return kExitOk;
}

int cmd_export(const Options& o, Json& r, std::ostream& out) {
    auto in = load(o.inputs.at(0), o);
    std::string text;
    if (o.format == "dot") {
        text = to_dot(in.mmph, DotGraph::Incidence);
    } else if (o.format == "dot-orthogonality") {
        text = to_dot(in.mmph, DotGraph::Orthogonality);
    } else if (o.format == "json") {
        text = to_json(in.mmph, in.coords ? &*in.coords : nullptr).dump(2) + "\n";
    } else if (o.format == "layout3d") {
        auto layout = layout3d(in.mmph, o.seed, o.iterations);
        Json j = layout_json(in.mmph, layout);
        j["seed"] = o.seed;
        text = j.dump(2) + "\n";
        if (!o.obj_path.empty()) write_file(o.obj_path, layout_obj(in.mmph, layout));
    } else {
        throw std::invalid_argument("unknown export format '" + o.format + "'");
    }
    if (o.out_path.empty()) {
        out << text;
        r = nullptr;
    } else {
        write_file(o.out_path, text);
        r["format"] = o.format;
        r["written"] = o.out_path;
    }
    return kExitOk;
}

void print(const Json& r, const Options& o, std::ostream& out) {
    if (r.is_null()) return;
    if (o.json) {
        out << r.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : r.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Contextual sets as MMP hypergraphs", "mmph"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "JSON report instead of key: value lines");
    app.add_flag("--no-timings", o.no_timings, "omit wall-clock fields from reports");
    app.add_option("--seed", o.seed, "seed for randomized commands");
    app.add_option("--threads", o.threads, "worker threads (default: $MMPH_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--convention", o.convention, "naming convention for contextual sets")
        ->check(CLI::IsMember({"pavicic", "cabello"}));

    auto input = [&](CLI::App* sub, std::size_t count) {
        if (count == 1)
            sub->add_option("input", o.input, "MMP file, JSON file or @catalog-name")->required();
        else
            sub->add_option("inputs", o.inputs, "MMP files, JSON files or @catalog-names")->required()->expected(static_cast<int>(count));
        sub->add_option("--coords", o.coords_path, "coordinatization file");
    };
    auto output = [&](CLI::App* sub) {
        sub->add_option("-o,--out", o.out_path, "write the resulting hypergraph (.json for JSON)");
        sub->add_option("--coords-out", o.coords_out_path, "write the resulting coordinatization");
    };

    auto* parse = app.add_subcommand("parse", "parse and re-serialize");
    input(parse, 1);
    output(parse);
    parse->add_option("--relabel", o.relabel, "symbol handling")->check(CLI::IsMember({"preserve", "contiguous"}));

    auto* st = app.add_subcommand("stats", "size, degree and multiplicity statistics");
    input(st, 1);

    auto* check = app.add_subcommand("check", "decide contextuality and classify");
    input(check, 1);
    check->add_option("--budget", o.budget, "search node budget (0 = unlimited)");

    auto* crit = app.add_subcommand("critical", "test criticality");
    input(crit, 1);

    auto* strip = app.add_subcommand("strip", "remove multiplicity-1 vertices");
    input(strip, 1);
    output(strip);

    auto* del = app.add_subcommand("delete", "weak deletion of one vertex");
    input(del, 1);
    del->add_option("vertex", o.vertex, "vertex symbol")->required();
    output(del);

    auto* ext = app.add_subcommand("extend", "complete deficient edges");
    input(ext, 1);
    output(ext);
    ext->add_option("--mode", o.mode, "weak, strong or partial")->check(CLI::IsMember({"weak", "strong", "partial"}));
    ext->add_option("--keep", o.keep, "partial mode: deficient edges left unextended");

    auto* gen = app.add_subcommand("generate", "master hypergraph from vector components");
    gen->add_option("--components", o.components, "comma-separated scalars")->required();
    gen->add_option("--dim", o.dim, "dimension")->check(CLI::Range(2, 8));
    gen->add_option("--edges", o.edges, "bases or maximal")->check(CLI::IsMember({"bases", "maximal"}));
    gen->add_flag("--all-components", o.all_components, "keep every connected component");
    output(gen);

    auto* red = app.add_subcommand("reduce", "seeded reduction to critical sets");
    input(red, 1);
    output(red);
    red->add_option("--trials", o.trials, "independent runs (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "small contextual sub-hypergraphs");
    input(search, 1);
    output(search);
    search->add_option("--max-k", o.query.max_k);
    search->add_option("--max-l", o.query.max_l);
    search->add_option("--max-bases", o.query.max_complete_bases);
    search->add_option("--min-bases", o.query.min_complete_bases);
    search->add_option("--budget", o.query.budget);
    search->add_option("--max-results", o.query.max_results)->check(CLI::PositiveNumber);
    search->add_flag("--no-deletion", o.no_deletion, "only edge-induced subsets");

    auto* cont = app.add_subcommand("contains", "embed PATTERN into TARGET");
    input(cont, 2);
    cont->add_option("--budget", o.budget, "search node budget");

    auto* iso = app.add_subcommand("iso", "isomorphism test");
    input(iso, 2);

    auto* ver = app.add_subcommand("verify-coord", "check a coordinatization");
    input(ver, 1);

    auto* cat = app.add_subcommand("catalog", "built-in hypergraphs");
    cat->add_option("action", o.catalog_action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
    cat->add_option("name", o.catalog_name, "entry name");
    cat->add_flag("--coords", o.with_coords, "include coordinates");
    output(cat);

    auto* exp = app.add_subcommand("export", "dot, json or layout3d");
    input(exp, 1);
    exp->add_option("--format", o.format)->check(CLI::IsMember({"dot", "dot-orthogonality", "json", "layout3d"}));
    exp->add_option("-o,--out", o.out_path);
    exp->add_option("--obj", o.obj_path, "layout3d: also write a Wavefront OBJ");
    exp->add_option("--iterations", o.iterations, "layout3d iterations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    if (!o.input.empty()) o.inputs = {o.input};
    Json report = Json::object();
    try {
        int code = kExitOk;
        if (parse->parsed()) code = cmd_parse(o, report);
        else if (st->parsed()) code = cmd_stats(o, report);
        else if (check->parsed()) code = cmd_check(o, report);
        else if (crit->parsed()) code = cmd_critical(o, report);
        else if (strip->parsed()) code = cmd_strip(o, report);
        else if (del->parsed()) code = cmd_delete(o, report);
        else if (ext->parsed()) code = cmd_extend(o, report);
        else if (gen->parsed()) code = cmd_generate(o, report);
        else if (red->parsed()) code = cmd_reduce(o, report);
        else if (search->parsed()) code = cmd_search(o, report);
        else if (cont->parsed()) code = cmd_contains(o, report);
        else if (iso->parsed()) code = cmd_iso(o, report);
        else if (ver->parsed()) code = cmd_verify(o, report);
        else if (cat->parsed()) code = cmd_catalog(o, report);
        else if (exp->parsed()) code = cmd_export(o, report, out);
        print(report, o, out);
        return code;
    } catch (const BudgetExceeded& e) {
        report["status"] = "indeterminate";
        report["reason"] = e.what();
        print(report, o, out);
        return kExitIndeterminate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace mmph::cli
