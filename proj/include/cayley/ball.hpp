#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cayley/genset.hpp"
#include "cayley/limits.hpp"

namespace cayley {

// The closed ball of radius R around the identity with exact distances.
//
// Elements are numbered in (distance, canonical key) order, so each sphere is
// a contiguous, key-sorted index range. Immutable once built; safe for
// concurrent reads.
class BallIndex {
 public:
  using Index = std::uint32_t;
  static constexpr Index npos = UINT32_MAX;

  // Takes elements already sorted by (distance, key). Does not check that the
  // distances are correct; call validate() for untrusted input.
  BallIndex(GenSet gs, int radius, std::vector<GroupElement> elements, std::vector<std::uint8_t> distances);

  const GenSet& genset() const { return genset_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }

  const GroupElement& element(Index i) const { return elements_[i]; }
  int distance(Index i) const { return dist_[i]; }
  std::span<const GroupElement> elements() const { return elements_; }

  std::optional<Index> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  // Distance from the identity, or nullopt when it exceeds the radius.
  std::optional<int> distance_of(const GroupElement& g) const;

  // Index of element(i) * edge(e), or npos if it lies outside the ball.
  Index neighbor(Index i, int e) const { return adjacency_[static_cast<std::size_t>(i) * GenSet::kEdges + e]; }

  // Index range [first, last) of Sph(r); empty for r outside [0, radius].
  std::pair<Index, Index> sphere_range(int r) const;
  std::vector<std::size_t> sphere_sizes() const;

  // Checks every BallIndex invariant (identity at 0, sorted order, each
  // element at d > 0 has a neighbour at d - 1, neighbours differ by at most
  // one, interior elements have all neighbours present, radius attained).
  // Throws ValidationError.
  void validate() const;

  friend bool operator==(const BallIndex& x, const BallIndex& y) {
    return x.genset_.name() == y.genset_.name() && x.radius_ == y.radius_ && x.elements_ == y.elements_ &&
           x.dist_ == y.dist_;
  }

 private:
  GenSet genset_;
  int radius_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint8_t> dist_;
  std::vector<Index> sphere_begin_;
  std::unordered_map<GroupElement, Index, GroupElementHash> index_;
  std::vector<Index> adjacency_;
};

// Breadth-first enumeration of B(radius). Throws ResourceError when the
// element cap or deadline is hit; never truncates silently.
BallIndex build_ball(const GenSet& gs, int radius, const ResourceLimits& limits = {});

}  // namespace cayley
