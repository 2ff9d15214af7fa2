#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

// Malformed input: out-of-range good ids, non-bijective permutations,
// dimension mismatches, unparsable files.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::logic_error {
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// The operation is defined only for some valuation kinds.
struct UnsupportedKindError : std::logic_error {
  explicit UnsupportedKindError(const std::string& what) : std::logic_error(what) {}
};

// An enumeration or certification exceeds the configured budget.
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee of matroid rank functions failed; signals a broken oracle.
struct InternalInvariantError : std::logic_error {
  explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fairdiv
