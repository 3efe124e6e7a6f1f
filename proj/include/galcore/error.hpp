#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galcore {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_{line} {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// A size limit (carrier width, materialization cap, enumeration budget) was exceeded.
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// Two structures that must share their carriers (and orders) do not.
class CarrierMismatch : public Error {
  public:
    using Error::Error;
};

/// Table lengths or index ranges do not fit the posets they refer to.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A subset pair was passed where a preconcept (D within H(C)) is required.
class NotPreconcept : public Error {
  public:
    using Error::Error;
};

/// A Galois connection was expected to live between powerset lattices.
class NotPowersetLattice : public Error {
  public:
    using Error::Error;
};

/// A map pair does not satisfy the commuting squares of a Galois-connection morphism.
class InvalidMorphism : public Error {
  public:
    using Error::Error;
};

/// Composition of morphisms whose endpoints do not match.
class EndpointMismatch : public Error {
  public:
    using Error::Error;
};

} // namespace galcore
