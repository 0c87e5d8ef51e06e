#pragma once

#include <stdexcept>
#include <string>

namespace bip {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad tables, mismatched endpoints, unknown fields).
struct SchemaError : Error {
  using Error::Error;
};

// A requested configuration exceeds the configured caps.
struct CapError : Error {
  using Error::Error;
};

}  // namespace bip
