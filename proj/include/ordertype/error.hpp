#pragma once

#include <stdexcept>
#include <string>

namespace otype {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible degree, or a malformed image array.
class PermutationError : public Error {
 public:
  using Error::Error;
};

/// Closure grew past the configured element cap.
class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::size_t cap)
      : Error("group enumeration exceeded the cap of " + std::to_string(cap) +
              " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Too many conjugacy classes for normal-subgroup enumeration.
class ClassCountExceeded : public Error {
 public:
  using Error::Error;
};

/// Order spectrum recovered from an exponent table has a negative count.
class InconsistentSpectrum : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

/// A selector or certificate id that the catalog cannot resolve.
class ResolutionError : public CatalogError {
 public:
  using CatalogError::CatalogError;
};

class SystemError : public Error {
 public:
  using Error::Error;
};

}  // namespace otype
