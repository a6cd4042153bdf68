#pragma once

#include <stdexcept>
#include <string>

namespace fflab {

// Base for the numerical failure modes that callers are expected to handle.
// Contract violations (bad degree, mismatched lengths) throw std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The polynomial is not (numerically) real-rooted.
class NonRealRooted : public Error {
 public:
  using Error::Error;
};

// A quantity that needs distinct roots was handed a repeated root.
class RepeatedRoot : public Error {
 public:
  using Error::Error;
};

// Input too close to the degenerate set for a differentiable-map operation.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A finite-difference stencil would reorder the roots it perturbs.
class PerturbationCrossing : public DegenerateInput {
 public:
  using DegenerateInput::DegenerateInput;
};

}  // namespace fflab
