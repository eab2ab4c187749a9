#include "cayley/ball.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "cayley/error.hpp"

namespace cayley {

BallIndex::BallIndex(GenSet gs, int radius, std::vector<GroupElement> elements, std::vector<std::uint8_t> distances)
    : genset_(std::move(gs)), radius_(radius), elements_(std::move(elements)), dist_(std::move(distances)) {
  if (radius_ < 0 || radius_ > 250) throw InputError("ball radius out of range");
  if (dist_.size() != elements_.size()) throw InputError("distance table size mismatch");
  index_.reserve(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw ValidationError("duplicate element " + elements_[i].key() + " in ball");
  }
  sphere_begin_.assign(static_cast<std::size_t>(radius_) + 2, 0);
  for (auto d : dist_) {
    if (d > radius_) throw ValidationError("element at distance " + std::to_string(d) + " exceeds radius");
    ++sphere_begin_[d + 1u];
  }
  std::partial_sum(sphere_begin_.begin(), sphere_begin_.end(), sphere_begin_.begin());
  adjacency_.resize(elements_.size() * GenSet::kEdges, npos);
  for (Index i = 0; i < elements_.size(); ++i)
    for (int e = 0; e < GenSet::kEdges; ++e) {
      auto it = index_.find(elements_[i] * genset_.edge(e));
      if (it != index_.end()) adjacency_[static_cast<std::size_t>(i) * GenSet::kEdges + e] = it->second;
    }
}

std::optional<BallIndex::Index> BallIndex::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BallIndex::distance_of(const GroupElement& g) const {
  auto i = index_of(g);
  if (!i) return std::nullopt;
  return dist_[*i];
}

std::pair<BallIndex::Index, BallIndex::Index> BallIndex::sphere_range(int r) const {
  if (r < 0 || r > radius_) return {0, 0};
  return {sphere_begin_[static_cast<std::size_t>(r)], sphere_begin_[static_cast<std::size_t>(r) + 1]};
}

std::vector<std::size_t> BallIndex::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (int r = 0; r <= radius_; ++r) {
    auto [first, last] = sphere_range(r);
    out.push_back(last - first);
  }
  return out;
}

void BallIndex::validate() const {
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (elements_.empty() || !elements_[0].is_identity() || dist_[0] != 0)
    fail("the identity must be the first element, at distance 0");
  for (Index i = 1; i < elements_.size(); ++i) {
    if (dist_[i] == 0) fail("only the identity may have distance 0");
    if (dist_[i] < dist_[i - 1] || (dist_[i] == dist_[i - 1] && !(elements_[i - 1].key() < elements_[i].key())))
      fail("records are not sorted by (distance, key) near " + elements_[i].key());
  }
  for (int r = 0; r <= radius_; ++r) {
    auto [first, last] = sphere_range(r);
    if (first == last) fail("sphere of radius " + std::to_string(r) + " is empty");
  }
  for (Index i = 0; i < elements_.size(); ++i) {
    const int d = dist_[i];
    bool has_parent = d == 0;
    for (int e = 0; e < GenSet::kEdges; ++e) {
      Index j = neighbor(i, e);
      if (j == npos) {
        if (d < radius_) fail("neighbour of interior element " + elements_[i].key() + " is missing");
        continue;
      }
      const int dj = dist_[j];
      if (dj > d + 1 || dj < d - 1) fail("adjacent elements " + elements_[i].key() + " and " + elements_[j].key() +
                                         " have inconsistent distances");
      if (dj == d - 1) has_parent = true;
    }
    if (!has_parent) fail("element " + elements_[i].key() + " has no neighbour one step closer to the identity");
  }
}

BallIndex build_ball(const GenSet& gs, int radius, const ResourceLimits& limits) {
  if (radius < 0) throw InputError("radius must be non-negative");
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<std::vector<GroupElement>> layers(1, {GroupElement::identity()});
  seen.insert(GroupElement::identity());
  std::size_t steps = 0;
  for (int r = 1; r <= radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& g : layers.back()) {
      for (int e = 0; e < GenSet::kEdges; ++e) {
        GroupElement h = g * gs.edge(e);
        if (seen.insert(h).second) {
          limits.check_size(seen.size());
          next.push_back(std::move(h));
        }
        if ((++steps & 0xfff) == 0) limits.check_deadline();
      }
    }
    layers.push_back(std::move(next));
  }
  seen.clear();

  std::vector<GroupElement> elements;
  std::vector<std::uint8_t> dist;
  for (int r = 0; r <= radius; ++r) {
    auto& layer = layers[static_cast<std::size_t>(r)];
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) keyed.emplace_back(layer[i].key(), i);
    std::sort(keyed.begin(), keyed.end());
    for (auto& [key, i] : keyed) {
      elements.push_back(std::move(layer[i]));
      dist.push_back(static_cast<std::uint8_t>(r));
    }
    layer = {};
  }
  limits.check_deadline();
  return BallIndex(gs, radius, std::move(elements), std::move(dist));
}

}  // namespace cayley
