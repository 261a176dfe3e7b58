#pragma once

#include "mmph/hypergraph.hpp"
#include "mmph/mmp_codec.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmph {

enum class Provenance {
    Embedded, // literal text stored in the library
    Derived,  // produced by replaying `recipe`
};

struct CatalogEntry {
    std::string name;
    Mmph mmph;
    std::optional<Coordinatization> coords;
    Provenance provenance = Provenance::Derived;
    std::string recipe;
    std::string description;
};

/// Literal MMP text of the embedded 69-50 and its coordinatization.
std::string_view embedded_69_50_text() noexcept;
std::string_view embedded_69_50_coordinates() noexcept;

/// Seed for which the 24-24 reduction ends at an 18-9.
inline constexpr std::uint64_t kSeed18_9 = 0;

/// Names in listing order.
const std::vector<std::string>& catalog_names();

/// Materializes an entry (cached after first use; safe for concurrent calls).
/// Throws std::invalid_argument for unknown names.
const CatalogEntry& catalog_get(std::string_view name);

} // namespace mmph
