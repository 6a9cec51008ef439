#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moreau {

/// What a convex piecewise-cubic validation rejected.
enum class ValidationFault {
  BadBreakpoints,  ///< breakpoints not strictly increasing / length mismatch
  NotContinuous,   ///< adjacent pieces disagree at a breakpoint
  NotConvexPiece,  ///< second-derivative condition fails on a subdomain
  SlopeDecrease,   ///< derivative jump at a breakpoint is negative
  EmptyDomain,     ///< bounds with lo >= hi, or restriction kills the domain
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFault fault, std::size_t index, const std::string& what)
      : std::runtime_error(what), fault_(fault), index_(index) {}

  ValidationFault fault() const { return fault_; }
  /// Breakpoint indices are 1-based (x_1..x_{m-1}); piece indices 0-based.
  std::size_t index() const { return index_; }

 private:
  ValidationFault fault_;
  std::size_t index_;
};

class OutOfDomain : public std::domain_error {
 public:
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

class BadParam : public std::invalid_argument {
 public:
  explicit BadParam(const std::string& what) : std::invalid_argument(what) {}
};

/// The cubic prox root formula was evaluated outside the cell where it is valid.
class NegativeDiscriminant : public std::logic_error {
 public:
  explicit NegativeDiscriminant(const std::string& what) : std::logic_error(what) {}
};

class NoBracket : public std::logic_error {
 public:
  explicit NoBracket(const std::string& what) : std::logic_error(what) {}
};

class MaxIterExceeded : public std::runtime_error {
 public:
  explicit MaxIterExceeded(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateRay : public std::runtime_error {
 public:
  explicit DegenerateRay(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace moreau
