#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "cayley/free_word.hpp"

namespace cayley {

// An element of F2 x F2 in normal form: one reduced word per free factor.
// Equality is componentwise letter equality.
class GroupElement {
 public:
  GroupElement() = default;
  // Throws InputError if a component uses the other factor's letters.
  GroupElement(FreeWord left, FreeWord right);

  static GroupElement identity() { return {}; }
  // Inverse of key(). Rejects malformed text and non-reduced components.
  static GroupElement from_key(std::string_view key);

  const FreeWord& left() const { return left_; }
  const FreeWord& right() const { return right_; }
  bool is_identity() const { return left_.empty() && right_.empty(); }

  GroupElement inverse() const { return GroupElement(left_.inverse(), right_.inverse(), Trusted{}); }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.left_ * y.left_, x.right_ * y.right_, Trusted{});
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Structural order on (left, right); not the canonical key order.
  friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;

  // "1,-2|3,3": comma-separated letters of left, '|', then right.
  std::string key() const;

  std::size_t hash() const noexcept { return left_.hash() * 31u + right_.hash(); }

 private:
  struct Trusted {};
  GroupElement(FreeWord left, FreeWord right, Trusted) : left_(std::move(left)), right_(std::move(right)) {}

  FreeWord left_;
  FreeWord right_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return g.hash(); }
};

inline GroupElement elem_mul(const GroupElement& x, const GroupElement& y) { return x * y; }
inline GroupElement elem_inv(const GroupElement& x) { return x.inverse(); }
inline std::string canonical_key(const GroupElement& x) { return x.key(); }

// Order of canonical keys as ASCII strings; the tie-break order for searches.
bool key_less(const GroupElement& x, const GroupElement& y);

// Geodesic length under the standard marking a, b, c, d: |left| + |right|.
inline int s1_length(const GroupElement& x) { return static_cast<int>(x.left().size() + x.right().size()); }

}  // namespace cayley

template <>
struct std::hash<cayley::GroupElement> {
  std::size_t operator()(const cayley::GroupElement& g) const noexcept { return g.hash(); }
};
