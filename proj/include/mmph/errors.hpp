#pragma once

#include <stdexcept>
#include <string>

namespace mmph {

/// Malformed MMP, coordinatization, or scalar text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structurally invalid hypergraph or an edit that would produce one.
class InvalidHypergraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic mixing Q(sqrt2) with Q(omega), or vectors of different dimension.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran past its configured node budget without deciding.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mmph
