#include "braidlab/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string_view>

namespace braidlab {

std::size_t dense_dimension_limit() {
  constexpr std::size_t kDefault = 4096;
  const char* raw = std::getenv("BRAIDLAB_MAX_DIM");
  if (raw == nullptr) return kDefault;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw ValidationError("BRAIDLAB_MAX_DIM must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

void require_within(std::size_t dimension, std::size_t limit, const std::string& what) {
  if (dimension > limit) {
    throw GuardError(what + ": dimension " + std::to_string(dimension) + " exceeds limit " +
                     std::to_string(limit));
  }
}

std::size_t checked_pow(std::size_t base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base) {
      throw GuardError("integer power overflows: " + std::to_string(base) + "^" +
                       std::to_string(exponent));
    }
    result *= base;
  }
  return result;
}

}  // namespace braidlab
