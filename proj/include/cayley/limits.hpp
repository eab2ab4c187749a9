#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace cayley {

struct ResourceLimits {
  std::size_t max_elements = 5'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static ResourceLimits with_timeout(std::chrono::seconds timeout, std::size_t max_elements = 5'000'000) {
    return {max_elements, std::chrono::steady_clock::now() + timeout};
  }

  // Throws ResourceError once the deadline has passed.
  void check_deadline() const;
  // Throws ResourceError when `count` exceeds max_elements.
  void check_size(std::size_t count) const;
};

}  // namespace cayley
