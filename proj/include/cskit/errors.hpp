#pragma once

#include <stdexcept>
#include <string>

namespace cskit {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (bad file, cap, cycle, ...).
// The CLI maps these to exit code 3.
struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct CapExceeded : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotConvexGeometry : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Cycle detected where acyclicity is required (graph, base, or system).
struct CyclicError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct MissingAncestor : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct BoundExceeded : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NotSperner : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct PreconditionViolated : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct InconsistentInput : PreconditionError {
  using PreconditionError::PreconditionError;
};

// An internal invariant was breached; exit code 4 in the CLI.
struct InternalError : Error {
  using Error::Error;
};

struct ExtractionFailed : InternalError {
  using InternalError::InternalError;
};

}  // namespace cskit
