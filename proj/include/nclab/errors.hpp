#pragma once

#include <stdexcept>
#include <string>

namespace nclab {

// A physical parameter is outside its admissible range, or an operation was
// requested outside its domain of validity (e.g. dynamics with r = 0).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested quantity is undefined for this state (e.g. g2 of the bare
// vacuum, whose mean photon number vanishes).
class DegenerateState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P(beta) was requested where it does not exist as a probability density.
class NonclassicalRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P(beta) degenerates to a delta function (existence margin at zero).
class DegenerateDistribution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The truncated Fock basis is too small to represent the requested state or
// its evolution to the required accuracy.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root bracketing failed: no sign change within the search limits.
class NoBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nclab
