#pragma once

#include <stdexcept>
#include <string>

namespace hn {

/// Root of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The instance violates a standing assumption (uncovered player, negative cost, ...).
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to exceed its hard size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The feasible allocation set is empty.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Every row of a row system was fixed but the allocation is still not a
/// single point: the family does not determine a unique lexicographic maximizer.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Signals a solver bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hn
