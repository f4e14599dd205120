#pragma once

#include <stdexcept>
#include <string>

namespace pairgraph {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input files, format-contract violations, and degenerate data.
// The CLI maps these to exit code 2.
class data_error : public error {
public:
    using error::error;
};

// Violated preconditions and internal invariants. CLI exit code 3.
class invariant_error : public error {
public:
    using error::error;
};

}  // namespace pairgraph
