#pragma once

#include "mmph/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mmph {

/// 0-1 value per vertex id.
using Assignment = std::vector<std::uint8_t>;

/// Exactly one vertex valued 1 in every hyperedge.
bool verify_assignment(const Mmph& h, const Assignment& a);

/// Names of the vertices valued 1, in vertex id order.
std::vector<std::string> ones(const Mmph& h, const Assignment& a);

enum class Verdict { NonContextual, Contextual, Indeterminate };

struct DecideOptions {
    std::uint64_t node_budget = 0; // 0 = unlimited
};

struct DecideResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Assignment> witness;
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

/// Exact-cover search (columns = hyperedges, rows = vertices) with dancing
/// links. Column choice: fewest remaining rows, lowest edge index on ties.
/// Rows are tried in alphabet order of the vertex symbols.
DecideResult decide(const Mmph& h, const DecideOptions& options = {});

std::optional<Assignment> find_assignment(const Mmph& h);
bool is_contextual(const Mmph& h);

inline constexpr std::size_t kBruteForceMaxVertices = 25;

/// Exhaustive 2^k enumeration; the test oracle for `decide`.
std::optional<Assignment> brute_force_assignment(const Mmph& h);

enum class Kind { NonContextual, KS, NonKS };

struct Classification {
    Kind kind = Kind::NonContextual;
    std::string name;  // under this library's convention
    std::string alias; // under the alternative (Cabello) convention
};

Classification classify(const Mmph& h);
Classification classify(const Mmph& h, bool contextual);

} // namespace mmph
