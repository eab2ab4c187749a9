#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace cayley {

// Letters are signed generator indices. The first free factor uses +-1, +-2
// and the second free factor uses +-3, +-4.
using Letter = std::int8_t;

enum class Factor { left, right };

// Factor owning a letter, or nullopt for an index outside {+-1..+-4}.
std::optional<Factor> factor_of(int letter);

// A freely reduced word in one rank-2 free factor.
class FreeWord {
 public:
  using Storage = boost::container::small_vector<Letter, 14>;

  FreeWord() = default;

  // Free reduction of an arbitrary letter sequence. Throws InputError on
  // invalid indices or when letters from both factors are mixed.
  static FreeWord reduce(std::span<const int> letters);
  static FreeWord reduce(std::initializer_list<int> letters);

  std::span<const Letter> letters() const { return {letters_.data(), letters_.size()}; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // nullopt for the empty word.
  std::optional<Factor> factor() const;

  FreeWord inverse() const;

  // Concatenate and cancel. Both operands must come from the same factor.
  friend FreeWord operator*(const FreeWord& x, const FreeWord& y);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y);

  // "1,-2" style; empty string for the identity.
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  Storage letters_;
};

inline FreeWord reduce_free_word(std::span<const int> letters) { return FreeWord::reduce(letters); }

// Signed count of occurrences of a letter index (sign of `letter` ignored).
int exponent_sum(const FreeWord& w, int letter);

}  // namespace cayley
