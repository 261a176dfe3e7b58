#pragma once

#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mmph {

enum class DotGraph {
    Incidence,     // bipartite: vertices and hyperedges as nodes
    Orthogonality, // vertices adjacent when they share a hyperedge
};

std::string to_dot(const Mmph& h, DotGraph kind = DotGraph::Incidence);

/// {"k","l","n","vertices":[...],"edges":[[...]],"coordinates":{...}}.
nlohmann::ordered_json to_json(const Mmph& h, const Coordinatization* coords = nullptr);

/// Inverse of to_json; coordinates, when present, are returned through `coords`.
Mmph from_json(const nlohmann::ordered_json& j, Coordinatization* coords = nullptr);

struct Layout {
    std::vector<std::array<double, 3>> positions; // by vertex id
};

/// Force-directed placement of the 2-section graph in 3D. Deterministic for a
/// given seed.
Layout layout3d(const Mmph& h, std::uint64_t seed = 0, std::size_t iterations = 300);

nlohmann::ordered_json layout_json(const Mmph& h, const Layout& layout);

/// Wavefront OBJ: one `v` per vertex, one `l` polyline per hyperedge.
std::string layout_obj(const Mmph& h, const Layout& layout);

} // namespace mmph
