#pragma once

#include <stdexcept>

namespace arcbound {

// Endpoint equation has no admissible parameter for the requested target.
struct NoSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two bounds keep a fixed order over the whole scan interval.
struct NoCrossoverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed-form critical points require a nonnegative radicand.
struct ComplexRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An evaluation hit a vanishing denominator.
struct SingularDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-difference step shrank below what the precision can resolve.
struct StepCollapseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check that should always hold came out false.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace arcbound
