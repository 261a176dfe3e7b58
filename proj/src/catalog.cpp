#include "mmph/catalog.hpp"

#include "mmph/structure_ops.hpp"
#include "mmph/vector_gen.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mmph {

namespace {

constexpr std::string_view k69_50 =
    "123,145,267,389,9YA,5ZA,4aB,6bB,7cC,8dC,5eD,6fD,8gD,4hC,7iA,9jB,1EF,2GH,3IJ,KkF,KlJ,KmH,LnE,LoG,LpJ,MqH,"
    "MrI,MsE,NtF,NuG,NvI,1OP,2QR,3ST,UwO,UxT,UyR,VzP,V!Q,V\"T,W#R,W$S,W%P,X&O,X'Q,X(S,BLV,CMW,AKU,DNX.";

constexpr std::string_view k69_50_coords =
    "1={0,0,1} 2={0,1,0} 3={1,0,0} 4={1,-w2,0} 5={1,w2,0} 6={1,0,-w2} 7={1,0,w2} 8={0,1,1}\n"
    "9={0,1,-1} A={-1,w2,w2} B={1,w2,w2} C={1,w2,-w2} D={1,-w2,w2} E={1,-1,0} F={1,1,0}\n"
    "G={w2,0,-1} H={w2,0,1} I={0,w2,1} J={0,w2,-1} K={-w2,w2,1} L={w2,w2,1} M={w2,w2,-1}\n"
    "N={w2,-w2,1} O={w2,1,0} P={w2,-1,0} Q={1,0,-1} R={1,0,1} S={0,1,w2} T={0,1,-w2}\n"
    "U={-w2,1,w2} V={w2,1,w2} W={w2,1,-w2} X={w2,-1,w2} Y={2w,1,1} Z={1,-w2,2w2}\n"
    "a={-1,-w2,2w2} b={-1,2w2,-w2} c={-1,2w2,w2} d={2w,-1,1} e={-1,w2,2w2} f={1,2w2,w2}\n"
    "g={2w,1,-1} h={1,w2,2w2} i={1,2w2,-w2} j={2w,-1,-1} k={1,-1,2w} l={2w2,w2,1}\n"
    "m={w2,2w2,-1} n={-1,-1,2w} o={-w2,2w2,-1} p={2w2,-w2,-1} q={-w2,2w2,1} r={2w2,-w2,1}\n"
    "s={1,1,2w} t={-1,1,2w} u={w2,2w2,1} v={2w2,w2,-1} w={w2,-1,2w2} x={2w2,1,w2}\n"
    "y={1,2w,-1} z={-w2,-1,2w2} !={-1,2w,-1} \"={2w2,-1,-w2} #={-1,2w,1} $={2w2,-1,w2}\n"
    "%={w2,1,2w2} &={-w2,1,2w2} '={1,2w,1} (={2w2,1,-w2}\n";

Coordinatization restrict(const Coordinatization& c, const Mmph& h) {
    Coordinatization out(c.dimension());
    for (const auto& n : h.names()) out.set(n, *c.find(n));
    return out;
}

CatalogEntry master_entry(std::string name, std::string_view components, std::size_t n, EdgeMode mode,
                          std::string description) {
    GenerationOptions opts;
    opts.mode = mode;
    auto m = master_from_components(parse_components(components), n, opts);
    CatalogEntry e;
    e.name = std::move(name);
    e.mmph = std::move(m.mmph);
    e.coords = std::move(m.coords);
    e.recipe = "master({" + std::string(components) + "}, " + std::to_string(n) + ", " +
               (mode == EdgeMode::BasesOnly ? "bases" : "maximal") + ")";
    e.description = std::move(description);
    return e;
}

CatalogEntry build(std::string_view name) {
    if (name == "69-50") {
        CatalogEntry e;
        e.name = "69-50";
        e.mmph = parse_mmph(k69_50);
        auto parsed = parse_coordinatization(k69_50_coords, e.mmph);
        e.coords = std::move(parsed.coords);
        e.provenance = Provenance::Embedded;
        e.recipe = "embedded";
        e.description = "critical non-KS set in dimension 3 over the Eisenstein field";
        return e;
    }
    if (name == "33-50") {
        const auto& src = catalog_get("69-50");
        CatalogEntry e;
        e.name = "33-50";
        e.mmph = strip_mult1(src.mmph).mmph;
        e.coords = restrict(*src.coords, e.mmph);
        e.recipe = "strip(69-50)";
        e.description = "69-50 without its multiplicity-1 vertices";
        return e;
    }
    if (name == "yu-oh-13-16") {
        auto e = master_entry("yu-oh-13-16", "0,1,-1", 3, EdgeMode::AllMaximalCliques,
                              "maximal orthogonal cliques of the {0,1,-1} rays in dimension 3");
        return e;
    }
    if (name == "25-16") {
        const auto& src = catalog_get("yu-oh-13-16");
        auto ext = weak_extend(src.mmph, *src.coords);
        CatalogEntry e;
        e.name = "25-16";
        e.mmph = std::move(ext.mmph);
        e.coords = std::move(ext.coords);
        e.recipe = "weak_extend(yu-oh-13-16)";
        e.description = "Yu-Oh set with every dyad completed to a basis";
        return e;
    }
    if (name == "24-24")
        return master_entry("24-24", "0,1,-1", 4, EdgeMode::BasesOnly, "{0,1,-1} master in dimension 4");
    if (name == "18-9") {
        const auto& src = catalog_get("24-24");
        auto trace = reduce_to_critical(src.mmph, kSeed18_9);
        CatalogEntry e;
        e.name = "18-9";
        e.mmph = std::move(trace.result);
        e.coords = restrict(*src.coords, e.mmph);
        e.recipe = "reduce(24-24, seed " + std::to_string(kSeed18_9) + ")";
        e.description = "critical KS set in dimension 4";
        return e;
    }
    if (name == "17-9") {
        const auto& src = catalog_get("18-9");
        CatalogEntry e;
        e.name = "17-9";
        e.mmph = delete_vertex(src.mmph, src.mmph.name(0));
        e.coords = restrict(*src.coords, e.mmph);
        e.recipe = "delete_vertex(18-9, " + src.mmph.name(0) + ")";
        e.description = "18-9 after weak deletion of one vertex";
        return e;
    }
    if (name == "19-9") {
        const auto& src = catalog_get("17-9");
        auto ext = weak_extend(src.mmph, *src.coords);
        CatalogEntry e;
        e.name = "19-9";
        e.mmph = std::move(ext.mmph);
        e.coords = std::move(ext.coords);
        e.recipe = "weak_extend(17-9)";
        e.description = "17-9 with both deficient edges completed by fresh vertices";
        return e;
    }
    if (name == "master-bub")
        return master_entry("master-bub", "0,1,-1,2,-2,5", 3, EdgeMode::BasesOnly, "rational master in dimension 3");
    if (name == "master-peres")
        return master_entry("master-peres", "0,1,-1,r2,-r2,3", 3, EdgeMode::BasesOnly,
                            "master over Q(sqrt 2) in dimension 3");
    if (name == "master-eisenstein-w")
        return master_entry("master-eisenstein-w", "0,w,-w,2w,w2,-w2,2w2", 3, EdgeMode::BasesOnly,
                            "Eisenstein master without the unit 1");
    if (name == "master-eisenstein-1")
        return master_entry("master-eisenstein-1", "0,1,-1,2w,w2,-w2,2w2", 3, EdgeMode::BasesOnly,
                            "Eisenstein master containing the 69-50 rays");
    throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

} // namespace

std::string_view embedded_69_50_text() noexcept { return k69_50; }
std::string_view embedded_69_50_coordinates() noexcept { return k69_50_coords; }

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "69-50", "33-50", "yu-oh-13-16", "25-16", "24-24", "18-9", "17-9", "19-9",
        "master-bub", "master-peres", "master-eisenstein-w", "master-eisenstein-1",
    };
    return names;
}

const CatalogEntry& catalog_get(std::string_view name) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(name); it != cache.end()) return *it->second;
    }
    // Built unlocked: recipes fetch their sources through catalog_get.
    auto entry = std::make_unique<CatalogEntry>(build(name));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(std::string(name), std::move(entry));
    return *it->second;
}

} // namespace mmph
