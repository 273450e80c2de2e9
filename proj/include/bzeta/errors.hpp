#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bzeta {

// Bad user input: malformed files, invalid parameters, non-graphical sequences.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonGraphicalError : public InputError {
 public:
  NonGraphicalError(const std::string& what, std::size_t failing_index)
      : InputError(what), failing_index_(failing_index) {}

  // 1-based k of the violated Erdos-Gallai inequality; 0 when the degree sum is odd.
  std::size_t failing_index() const noexcept { return failing_index_; }

 private:
  std::size_t failing_index_;
};

// Evaluation hit a pole of a rational expression.
class PoleError : public InputError {
 public:
  using InputError::InputError;
};

// A brute-force oracle was asked to run beyond its configured bound.
class BoundExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact division did not divide, or two routes that must agree did not.
// Always an implementation bug, never user error.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bzeta
