#include "mmph/export.hpp"

#include "mmph/errors.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace mmph {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

} // namespace

std::string to_dot(const Mmph& h, DotGraph kind) {
    std::string out;
    if (kind == DotGraph::Incidence) {
        out += "graph mmph {\n  node [shape=circle];\n";
        for (const auto& n : h.names()) out += "  " + quoted("v" + n) + " [label=" + quoted(n) + "];\n";
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            std::string e = quoted("e" + std::to_string(i));
            out += "  " + e + " [shape=box,label=" + quoted(std::to_string(i)) + "];\n";
            for (VertexId v : h.edge(i)) out += "  " + e + " -- " + quoted("v" + h.name(v)) + ";\n";
        }
    } else {
        out += "graph orthogonality {\n";
        for (const auto& n : h.names()) out += "  " + quoted(n) + ";\n";
        std::vector<std::vector<char>> seen(h.vertex_count(), std::vector<char>(h.vertex_count(), 0));
        for (const auto& e : h.edges())
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    VertexId x = std::min(e[a], e[b]), y = std::max(e[a], e[b]);
                    if (seen[x][y]) continue;
                    seen[x][y] = 1;
                    out += "  " + quoted(h.name(x)) + " -- " + quoted(h.name(y)) + ";\n";
                }
    }
    return out + "}\n";
}

nlohmann::ordered_json to_json(const Mmph& h, const Coordinatization* coords) {
    nlohmann::ordered_json j;
    j["k"] = h.vertex_count();
    j["l"] = h.edge_count();
    j["n"] = h.dimension();
    j["vertices"] = h.names();
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < h.edge_count(); ++i) edges.push_back(h.edge_names(i));
    j["edges"] = std::move(edges);
    if (coords) {
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (const auto& n : h.names())
            if (const Ray* r = coords->find(n)) c[n] = format_ray(*r);
        j["coordinates"] = std::move(c);
    }
    return j;
}

Mmph from_json(const nlohmann::ordered_json& j, Coordinatization* coords) {
    try {
        std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::vector<std::string>> named = j.at("edges").get<std::vector<std::vector<std::string>>>();
        std::map<std::string, VertexId> id;
        for (std::size_t i = 0; i < names.size(); ++i) id.emplace(names[i], static_cast<VertexId>(i));
        std::vector<Edge> edges;
        for (const auto& e : named) {
            Edge ids;
            for (const auto& n : e) {
                auto it = id.find(n);
                if (it == id.end()) throw ParseError("edge refers to unknown vertex '" + n + "'");
                ids.push_back(it->second);
            }
            edges.push_back(std::move(ids));
        }
        Mmph h(std::move(edges), std::move(names));
        if (coords && j.contains("coordinates")) {
            std::string text;
            for (const auto& [name, vec] : j.at("coordinates").items()) text += name + "=" + vec.get<std::string>() + "\n";
            *coords = parse_coordinatization(text, h).coords;
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed hypergraph JSON: ") + e.what());
    } catch (const InvalidHypergraph& e) {
        throw ParseError(e.what());
    }
}

Layout layout3d(const Mmph& h, std::uint64_t seed, std::size_t iterations) {
    const std::size_t k = h.vertex_count();
    Layout out;
    out.positions.resize(k);
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    for (auto& p : out.positions) p = {unit(), unit(), unit()};

    std::vector<std::pair<VertexId, VertexId>> springs;
    for (const auto& e : h.edges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) springs.emplace_back(e[a], e[b]);

    // Fruchterman-Reingold in a unit-volume box with linear cooling.
    const double ideal = k ? std::cbrt(1.0 / static_cast<double>(k)) : 1.0;
    std::vector<std::array<double, 3>> force(k);
    for (std::size_t it = 0; it < iterations; ++it) {
        const double temp = 0.1 * (1.0 - static_cast<double>(it) / static_cast<double>(iterations));
        for (auto& f : force) f = {0, 0, 0};
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                std::array<double, 3> d;
                double dist2 = 1e-9;
                for (int c = 0; c < 3; ++c) {
                    d[c] = out.positions[a][c] - out.positions[b][c];
                    dist2 += d[c] * d[c];
                }
                const double push = ideal * ideal / dist2;
                for (int c = 0; c < 3; ++c) {
                    force[a][c] += d[c] * push;
                    force[b][c] -= d[c] * push;
                }
            }
        for (auto [a, b] : springs) {
            std::array<double, 3> d;
            double dist2 = 0;
            for (int c = 0; c < 3; ++c) {
                d[c] = out.positions[a][c] - out.positions[b][c];
                dist2 += d[c] * d[c];
            }
            const double pull = std::sqrt(dist2) / ideal;
            for (int c = 0; c < 3; ++c) {
                force[a][c] -= d[c] * pull;
                force[b][c] += d[c] * pull;
            }
        }
        for (std::size_t v = 0; v < k; ++v) {
            double len = std::sqrt(force[v][0] * force[v][0] + force[v][1] * force[v][1] + force[v][2] * force[v][2]);
            if (len < 1e-12) continue;
            const double step = std::min(len, temp) / len;
            for (int c = 0; c < 3; ++c) out.positions[v][c] += force[v][c] * step;
        }
    }
    return out;
}

nlohmann::ordered_json layout_json(const Mmph& h, const Layout& layout) {
    nlohmann::ordered_json j = to_json(h);
    auto pos = nlohmann::ordered_json::object();
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        auto& p = layout.positions[v];
        pos[h.name(v)] = {std::round(p[0] * 1e6) / 1e6, std::round(p[1] * 1e6) / 1e6, std::round(p[2] * 1e6) / 1e6};
    }
    j["positions"] = std::move(pos);
    return j;
}

std::string layout_obj(const Mmph& h, const Layout& layout) {
    std::string out = "# " + std::to_string(h.vertex_count()) + "-" + std::to_string(h.edge_count()) + "\n";
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const auto& p = layout.positions[v];
        out += "v " + fixed(p[0]) + " " + fixed(p[1]) + " " + fixed(p[2]) + "\n";
    }
    for (const auto& e : h.edges()) {
        out += "l";
        for (VertexId v : e) out += " " + std::to_string(v + 1);
        if (e.size() > 2) out += " " + std::to_string(e.front() + 1);
        out += "\n";
    }
    return out;
}

} // namespace mmph
