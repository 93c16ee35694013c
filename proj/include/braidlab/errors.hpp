#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidlab {

/// Raised when an argument violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a size guard (dense dimension, factorial blow-up).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Dense-dimension guard; BRAIDLAB_MAX_DIM overrides the default of 4096.
std::size_t dense_dimension_limit();

/// Throws GuardError when `dimension` exceeds `limit`.
void require_within(std::size_t dimension, std::size_t limit, const std::string& what);

/// Integer power with overflow detection; throws GuardError on overflow.
std::size_t checked_pow(std::size_t base, int exponent);

}  // namespace braidlab
