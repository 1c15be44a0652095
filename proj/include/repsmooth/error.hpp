#pragma once

#include <stdexcept>
#include <string>

namespace repsmooth {

// Base for every failure reported by the library. Mathematical negatives
// (no lift, no coboundary, obstruction) are never exceptions; they are
// returned as std::nullopt or a tagged result.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotOnScheme : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnknownEntry : Error {
  using Error::Error;
};

struct SamplerExhausted : Error {
  using Error::Error;
};

}  // namespace repsmooth
