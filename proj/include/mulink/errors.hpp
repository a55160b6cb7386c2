#pragma once

#include <stdexcept>
#include <string>

namespace mulink {

// Malformed or invalid input document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition (bad label, repeated index, ...).
struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable size guard tripped (group-ring terms, word letters).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency assertion failed (e.g. meridian fixpoint not reached).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mulink
