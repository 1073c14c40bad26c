#pragma once

#include <stdexcept>
#include <string>

namespace threshspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: creation strings, polynomial text, graph6.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an otherwise well-formed value does not hold
/// (e.g. a disconnected sequence passed where a connected one is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The graph cannot be peeled into isolated/dominating vertices.
class NotThreshold : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// The polynomial is not the characteristic polynomial of any connected
/// threshold graph.
class NotThresholdSpectrum : public Error {
 public:
  using Error::Error;
};

class NonIntegerOrNegativeGamma : public NotThresholdSpectrum {
 public:
  using NotThresholdSpectrum::NotThresholdSpectrum;
};

}  // namespace threshspec
