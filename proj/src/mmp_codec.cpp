#include "mmph/mmp_codec.hpp"

#include "mmph/errors.hpp"

#include <array>
#include <cctype>
#include <set>

namespace mmph {

namespace {

constexpr std::array<char, 5> kReserved = {',', '.', '=', '{', '}'};

std::string build_alphabet() {
    std::string s;
    for (char c = '1'; c <= '9'; ++c) s += c;
    for (char c = 'A'; c <= 'Z'; ++c) s += c;
    for (char c = 'a'; c <= 'z'; ++c) s += c;
    for (int c = 33; c < 127; ++c) {
        auto ch = static_cast<char>(c);
        if (std::isalnum(static_cast<unsigned char>(ch))) continue;
        if (std::find(kReserved.begin(), kReserved.end(), ch) != kReserved.end()) continue;
        s += ch;
    }
    return s;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::string_view mmp_alphabet() noexcept {
    static const std::string alphabet = build_alphabet();
    return alphabet;
}

std::optional<std::size_t> alphabet_index(char c) noexcept {
    auto pos = mmp_alphabet().find(c);
    if (pos == std::string_view::npos) return std::nullopt;
    return pos;
}

std::string vertex_symbol(std::size_t i) {
    auto alphabet = mmp_alphabet();
    if (i < alphabet.size()) return std::string(1, alphabet[i]);
    return "#" + std::to_string(i + 1);
}

namespace {

// Parses one hypergraph starting at `pos`; leaves `pos` just past its '.'.
Mmph parse_one(std::string_view text, std::size_t& pos) {
    std::vector<std::vector<std::string>> edges;
    std::vector<std::string> current;
    auto close_edge = [&] {
        if (current.size() < 2)
            throw ParseError("hyperedge " + std::to_string(edges.size() + 1) + " has fewer than 2 vertices");
        std::set<std::string> unique(current.begin(), current.end());
        if (unique.size() != current.size())
            throw ParseError("hyperedge " + std::to_string(edges.size() + 1) + " repeats a vertex");
        edges.push_back(std::move(current));
        current.clear();
    };
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (is_space(c)) continue;
        if (c == ',') {
            close_edge();
        } else if (c == '.') {
            close_edge();
            ++pos;
            try {
                return Mmph::from_named_edges(edges);
            } catch (const InvalidHypergraph& e) {
                throw ParseError(e.what());
            }
        } else if (alphabet_index(c)) {
            current.emplace_back(1, c);
        } else {
            throw ParseError(std::string("unknown symbol '") + c + "' at offset " + std::to_string(pos));
        }
    }
    throw ParseError("missing '.' terminator");
}

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
}

} // namespace

Mmph parse_mmph(std::string_view text) {
    std::size_t pos = 0;
    Mmph h = parse_one(text, pos);
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError("trailing content after '.' terminator");
    return h;
}

std::vector<Mmph> parse_mmph_batch(std::string_view text) {
    std::vector<Mmph> out;
    std::size_t pos = 0;
    skip_space(text, pos);
    while (pos < text.size()) {
        out.push_back(parse_one(text, pos));
        skip_space(text, pos);
    }
    return out;
}

std::vector<std::string> output_symbols(const Mmph& h, Relabel mode) {
    const auto k = h.vertex_count();
    if (mode == Relabel::PreserveSymbols) {
        bool all_symbols = true;
        for (const auto& n : h.names()) all_symbols = all_symbols && n.size() == 1 && alphabet_index(n[0]);
        if (all_symbols) return h.names();
    }
    if (k > mmp_alphabet().size())
        throw InvalidHypergraph("hypergraph has " + std::to_string(k) + " vertices; the MMP alphabet has " +
                                std::to_string(mmp_alphabet().size()));
    std::vector<std::string> out(k);
    std::size_t next = 0;
    for (const auto& e : h.edges())
        for (VertexId v : e)
            if (out[v].empty()) out[v] = vertex_symbol(next++);
    return out;
}

std::string serialize_mmph(const Mmph& h, Relabel mode) {
    auto symbols = output_symbols(h, mode);
    std::string out;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (i) out += ',';
        for (VertexId v : h.edge(i)) out += symbols[v];
    }
    out += '.';
    return out;
}

void Coordinatization::set(const std::string& name, const Ray& ray) {
    if (dimension_ == 0) dimension_ = ray.dimension();
    if (ray.dimension() != dimension_)
        throw RingMismatch("ray for '" + name + "' has dimension " + std::to_string(ray.dimension()) + ", expected " +
                           std::to_string(dimension_));
    Ring joined = join_rings(ring_, ray.ring());
    if (joined != ring_) {
        for (auto& [_, r] : rays_) r = promoted(r, joined);
        ring_ = joined;
    }
    Ray stored = ray.ring() == ring_ ? ray : promoted(ray, ring_);
    rays_.insert_or_assign(name, std::move(stored));
}

const Ray* Coordinatization::find(std::string_view name) const {
    auto it = rays_.find(name);
    return it == rays_.end() ? nullptr : &it->second;
}

CoordinatizationParse parse_coordinatization(std::string_view text, const Mmph& h) {
    CoordinatizationParse out;
    out.coords = Coordinatization(h.dimension());
    std::size_t pos = 0;
    std::set<std::string> seen;
    while (true) {
        while (pos < text.size() && (is_space(text[pos]) || text[pos] == ',' || text[pos] == '.')) ++pos;
        if (pos >= text.size()) break;
        std::size_t eq = text.find('=', pos);
        if (eq == std::string_view::npos) throw ParseError("expected '<symbol>={...}' at offset " + std::to_string(pos));
        std::string symbol(text.substr(pos, eq - pos));
        while (!symbol.empty() && is_space(symbol.back())) symbol.pop_back();
        if (symbol.empty()) throw ParseError("missing symbol before '=' at offset " + std::to_string(eq));
        pos = eq + 1;
        skip_space(text, pos);
        if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{' after '" + symbol + "='");
        std::size_t close = text.find('}', pos);
        if (close == std::string_view::npos) throw ParseError("unterminated vector for '" + symbol + "'");
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;

        std::vector<RingScalar> comps;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string_view token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
            comps.push_back(parse_scalar(token));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!seen.insert(symbol).second) throw ParseError("duplicate coordinate entry for '" + symbol + "'");
        if (!h.find(symbol)) throw ParseError("coordinate entry for '" + symbol + "', which is not a vertex");
        if (comps.size() != h.dimension())
            throw ParseError("'" + symbol + "' has " + std::to_string(comps.size()) + " components, expected " +
                             std::to_string(h.dimension()));
        RayVector v;
        try {
            v = RayVector(std::move(comps));
            if (v.is_zero()) throw ParseError("'" + symbol + "' is the zero vector");
            out.coords.set(symbol, normalize_ray(v));
        } catch (const RingMismatch& e) {
            throw ParseError("'" + symbol + "': " + e.what());
        }
    }
    for (const auto& n : h.names())
        if (!out.coords.contains(n)) out.uncoordinatized.push_back(n);
    return out;
}

std::string serialize_coordinatization(const Mmph& h, const Coordinatization& c, Relabel mode) {
    auto symbols = output_symbols(h, mode);
    std::string out;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const Ray* r = c.find(h.name(v));
        if (!r) continue;
        out += symbols[v];
        out += '=';
        out += format_ray(*r);
        out += '\n';
    }
    return out;
}

MmpDocument parse_document(std::string_view text) {
    MmpDocument doc;
    std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
        doc.mmph = parse_mmph(text);
        return doc;
    }
    std::size_t dot = text.rfind('.', eq);
    if (dot == std::string_view::npos) throw ParseError("coordinates found before any '.'-terminated hypergraph");
    doc.mmph = parse_mmph(text.substr(0, dot + 1));
    auto parsed = parse_coordinatization(text.substr(dot + 1), doc.mmph);
    doc.coords = std::move(parsed.coords);
    doc.uncoordinatized = std::move(parsed.uncoordinatized);
    return doc;
}

} // namespace mmph
