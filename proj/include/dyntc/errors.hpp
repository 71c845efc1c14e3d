#pragma once

#include <stdexcept>
#include <string>

namespace dyntc {

// Shape disagreement between operands (e.g. multiplying matrices of
// different dimension).
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Row/column/vertex index outside the valid range.
class index_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// An update matrix that was required to be contained in its target is not.
// Signals misuse of reset/delete semantics.
class subset_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inserting an edge would close a directed cycle. Carries the offending
// back-path in the message.
class cycle_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Duplicate insert, missing delete, or a non-incident edge in a centered
// insertion.
class edge_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed trace file.
class trace_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dyntc
