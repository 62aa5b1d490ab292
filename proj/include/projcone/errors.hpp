#pragma once

#include <stdexcept>
#include <string>

namespace projcone {

// Malformed input files or values outside a schema's domain.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation was violated by the caller.
struct DomainError : std::logic_error {
  explicit DomainError(const std::string& what) : std::logic_error(what) {}
};

// An invariant the implementation relies on failed; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace projcone
