#include "cayley/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

std::optional<Factor> factor_of(int letter) {
  switch (std::abs(letter)) {
    case 1:
    case 2:
      return Factor::left;
    case 3:
    case 4:
      return Factor::right;
    default:
      return std::nullopt;
  }
}

FreeWord FreeWord::reduce(std::span<const int> letters) {
  FreeWord out;
  std::optional<Factor> seen;
  for (int l : letters) {
    auto f = factor_of(l);
    if (!f) throw InputError("invalid letter index " + std::to_string(l));
    if (seen && *seen != *f) throw InputError("letters from both free factors in one word");
    seen = f;
    if (!out.letters_.empty() && out.letters_.back() == -l) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(static_cast<Letter>(l));
    }
  }
  return out;
}

FreeWord FreeWord::reduce(std::initializer_list<int> letters) {
  return reduce(std::span<const int>(letters.begin(), letters.size()));
}

std::optional<Factor> FreeWord::factor() const {
  if (letters_.empty()) return std::nullopt;
  return factor_of(letters_.front());
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(static_cast<Letter>(-*it));
  return out;
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (x.factor() != y.factor()) throw InputError("cannot multiply words from different free factors");
  // Both operands are reduced, so cancellation only happens at the seam.
  std::size_t cancel = 0;
  const std::size_t nx = x.size(), ny = y.size();
  while (cancel < nx && cancel < ny && x.letters_[nx - 1 - cancel] == -y.letters_[cancel]) ++cancel;
  FreeWord out;
  out.letters_.reserve(nx + ny - 2 * cancel);
  out.letters_.insert(out.letters_.end(), x.letters_.begin(), x.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.letters_.insert(out.letters_.end(), y.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), y.letters_.end());
  return out;
}

std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y) {
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(), y.letters_.begin(),
                                                y.letters_.end());
}

std::string FreeWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<int>(letters_[i]));
  }
  return s;
}

std::size_t FreeWord::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : letters_) {
    h ^= static_cast<std::uint8_t>(l);
    h *= 1099511628211ULL;
  }
  h ^= letters_.size();
  h *= 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

int exponent_sum(const FreeWord& w, int letter) {
  const int target = std::abs(letter);
  int sum = 0;
  for (Letter l : w.letters()) {
    if (std::abs(l) == target) sum += l > 0 ? 1 : -1;
  }
  return sum;
}

}  // namespace cayley
