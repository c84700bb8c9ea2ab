#ifndef HILBERT_ERRORS_HPP
#define HILBERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbert {

struct DegreeUndefined : std::domain_error {
  DegreeUndefined() : std::domain_error("degree of the zero polynomial is undefined") {}
};

struct NotIntegerValued : std::domain_error {
  explicit NotIntegerValued(const std::string& what) : std::domain_error(what) {}
};

// Signals a bug: Macaulay parameters of an integer-valued polynomial
// are always integers.
struct InternalNonIntegerParameter : std::logic_error {
  explicit InternalNonIntegerParameter(const std::string& what) : std::logic_error(what) {}
};

struct NonPositiveCoefficient : std::domain_error {
  explicit NonPositiveCoefficient(const std::string& what) : std::domain_error(what) {}
};

struct EmptyPattern : std::domain_error {
  EmptyPattern() : std::domain_error("sign pattern must have length >= 1") {}
};

struct BoundViolated : std::domain_error {
  explicit BoundViolated(const std::string& what) : std::domain_error(what) {}
};

struct StabilizationNotDetected : std::runtime_error {
  explicit StabilizationNotDetected(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("zero denominator") {}
};

}  // namespace hilbert

#endif
