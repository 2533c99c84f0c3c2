#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Text did not conform to the polynomial grammar. Carries the byte
/// offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Operands belong to different rings (or monomial arities differ).
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// A configured resource guard tripped: exponent bound, Buchberger
/// S-pair budget, or similar runaway protection.
class GuardExceededError : public Error {
public:
  GuardExceededError(const std::string& what, std::size_t partial_size)
      : Error(what), partial_size_(partial_size) {}
  /// Size of the partial result at the moment the guard fired.
  std::size_t partial_size() const { return partial_size_; }

private:
  std::size_t partial_size_ = 0;
};

/// Operation requires an ideal of finite colength.
class NotMPrimaryError : public Error {
public:
  NotMPrimaryError(const std::string& what, std::string variable)
      : Error(what), variable_(std::move(variable)) {}
  /// A variable with no pure power in the leading-term ideal.
  const std::string& variable() const { return variable_; }

private:
  std::string variable_;
};

/// A fast combinatorial path was handed a non-monomial ideal.
class NonMonomialError : public Error {
public:
  using Error::Error;
};

/// The ascending colon chain did not repeat within the step cap.
class StabilizationError : public Error {
public:
  StabilizationError(const std::string& what, unsigned cap)
      : Error(what), cap_(cap) {}
  unsigned cap() const { return cap_; }

private:
  unsigned cap_;
};

/// Supplied elements are not a system of parameters inside the ideal.
class ParameterSystemError : public Error {
public:
  using Error::Error;
};

/// Candidate subideal is not contained in the ideal it should reduce.
class NotContainedError : public Error {
public:
  using Error::Error;
};

/// No power equality was found within the search bound.
class NotReductionError : public Error {
public:
  using Error::Error;
};

/// A randomized search (reduction sampling, tame sequences) ran out of
/// retries. Carries the seeds that were tried so the failure replays.
class SearchExhaustedError : public Error {
public:
  SearchExhaustedError(const std::string& what, std::vector<std::uint64_t> seeds)
      : Error(what), seeds_(std::move(seeds)) {}
  const std::vector<std::uint64_t>& seeds() const { return seeds_; }

private:
  std::vector<std::uint64_t> seeds_;
};

/// No exact polynomial fit of the requested degree stabilized.
class FitError : public Error {
public:
  using Error::Error;
};

/// Violation of an internal consistency invariant; always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace rrlab
