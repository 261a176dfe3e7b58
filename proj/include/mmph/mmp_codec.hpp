#pragma once

#include "mmph/exact_ring.hpp"
#include "mmph/hypergraph.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmph {

/// MMP vertex symbols: `1`-`9`, `A`-`Z`, `a`-`z`, then printable ASCII
/// punctuation in codepoint order without `,` `.` `=` `{` `}`. 88 symbols.
std::string_view mmp_alphabet() noexcept;

/// Position of `c` in the alphabet, if it is a symbol.
std::optional<std::size_t> alphabet_index(char c) noexcept;

/// Name of the i-th generated vertex: the alphabet symbol while one exists,
/// `#<i+1>` beyond it (such hypergraphs cannot be written as MMP text).
std::string vertex_symbol(std::size_t i);

/// Parses exactly one `.`-terminated hypergraph. Whitespace is ignored.
Mmph parse_mmph(std::string_view text);

/// Parses every `.`-terminated hypergraph in a batch file.
std::vector<Mmph> parse_mmph_batch(std::string_view text);

enum class Relabel {
    /// Keep vertex symbols when they are all single alphabet characters,
    /// otherwise relabel contiguously.
    PreserveSymbols,
    /// Relabel from the start of the alphabet in order of first appearance.
    Contiguous,
};

/// One line, `.`-terminated, no trailing newline.
std::string serialize_mmph(const Mmph& h, Relabel mode = Relabel::PreserveSymbols);

/// Vertex name -> ray, all rays sharing one dimension and field.
class Coordinatization {
public:
    Coordinatization() = default;
    explicit Coordinatization(std::size_t dimension) : dimension_(dimension) {}

    /// Inserts or replaces; rational rays are widened to the common field.
    void set(const std::string& name, const Ray& ray);
    const Ray* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }

    const std::map<std::string, Ray, std::less<>>& rays() const noexcept { return rays_; }
    std::size_t size() const noexcept { return rays_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    Ring ring() const noexcept { return ring_; }

    friend bool operator==(const Coordinatization&, const Coordinatization&) = default;

private:
    std::map<std::string, Ray, std::less<>> rays_;
    std::size_t dimension_ = 0;
    Ring ring_ = Ring::Rational;
};

struct CoordinatizationParse {
    Coordinatization coords;
    std::vector<std::string> uncoordinatized; // vertices of h without an entry
};

/// Reads `<symbol>={s1,...,sn}` entries (newline or comma separated) for the
/// vertices of `h`. Vectors are normalized on ingestion.
CoordinatizationParse parse_coordinatization(std::string_view text, const Mmph& h);

/// One `<symbol>={...}` line per vertex in id order, with integral display
/// vectors. Symbols follow the same relabeling rule as serialize_mmph.
std::string serialize_coordinatization(const Mmph& h, const Coordinatization& c,
                                       Relabel mode = Relabel::PreserveSymbols);

/// A file holding a hypergraph optionally followed by its coordinatization.
struct MmpDocument {
    Mmph mmph;
    std::optional<Coordinatization> coords;
    std::vector<std::string> uncoordinatized;
};

MmpDocument parse_document(std::string_view text);

/// Symbol each vertex is written with under `mode`; throws if k exceeds the
/// alphabet and relabeling is required.
std::vector<std::string> output_symbols(const Mmph& h, Relabel mode);

} // namespace mmph
