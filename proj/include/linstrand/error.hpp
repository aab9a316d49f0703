#pragma once

#include <stdexcept>
#include <string>

namespace linstrand {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad shapes, non-antichains, missing partitions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration was asked to run over too many vertices.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A computed quantity contradicts an invariant that must hold
// (negative homology dimension, nonzero boundary square, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Instance files that cannot be read or decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace linstrand
