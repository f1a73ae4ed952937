#pragma once

#include <stdexcept>
#include <string>

namespace tolsys {

// Malformed input: wrong shape, bad syntax, out-of-range index. CLI exit 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a type invariant
// (asymmetric adjacency, triangle inequality, ...). CLI exit 3.
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace tolsys
