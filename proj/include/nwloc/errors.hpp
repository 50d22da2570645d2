#pragma once
#include <stdexcept>
#include <string>

namespace nwloc {

// Argument outside the documented domain of an operation.
class invalid_argument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class unsupported_spin : public invalid_argument {
public:
  using invalid_argument::invalid_argument;
};

class invalid_helicity : public invalid_argument {
public:
  using invalid_argument::invalid_argument;
};

// Momentum direction requested for k = 0.
class undefined_direction : public invalid_argument {
public:
  using invalid_argument::invalid_argument;
};

// Well-formed request the engine deliberately does not evaluate
// (unequal times, negative-frequency overlaps, wrong family).
class unsupported_configuration : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical identity that must hold by construction was violated.
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace nwloc
