#include "cayley/limits.hpp"

#include <string>

#include "cayley/error.hpp"

namespace cayley {

void ResourceLimits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw ResourceError("timeout exceeded");
}

void ResourceLimits::check_size(std::size_t count) const {
  if (count > max_elements)
    throw ResourceError("ball exceeds the element cap of " + std::to_string(max_elements) + " elements");
}

}  // namespace cayley
