#pragma once

#include <stdexcept>
#include <string>

namespace sym2chab {

// Every library failure derives from Error so the CLI can map it onto an exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic on finite-precision 2-adic numbers.
struct DivisionByZeroToPrecision : Error {
  using Error::Error;
};
struct PrecisionExhausted : Error {
  using Error::Error;
};
struct Indistinguishable : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct RankTooLarge : Error {
  using Error::Error;
};

struct GenusTooSmall : Error {
  using Error::Error;
};
struct NotGood : Error {
  using Error::Error;
};
struct NonConvergence : Error {
  using Error::Error;
};
struct SingularComparison : Error {
  using Error::Error;
};
struct CertificateFailure : Error {
  using Error::Error;
};

struct SeedMissing : Error {
  using Error::Error;
};

// Malformed user input (files, flags). Carries the 1-based line number when known.
struct ParseError : Error {
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

}  // namespace sym2chab
