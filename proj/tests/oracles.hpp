#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// None of these go through BallIndex, Metric or the corridor search.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cayley/genset.hpp"

namespace cayley::oracle {

// Free reduction with an explicit stack over plain ints.
inline std::vector<int> stack_reduce(const std::vector<int>& letters) {
  std::vector<int> stack;
  for (int l : letters) {
    if (!stack.empty() && stack.back() + l == 0)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

// Distances from the identity by a plain queue BFS keyed on canonical keys.
inline std::map<std::string, int> naive_ball(const GenSet& gs, int radius) {
  std::map<std::string, int> dist;
  std::deque<GroupElement> queue{GroupElement::identity()};
  dist[GroupElement::identity().key()] = 0;
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    const int d = dist[g.key()];
    if (d == radius) continue;
    for (int e = 0; e < GenSet::kEdges; ++e) {
      GroupElement h = g * gs.edge(e);
      if (dist.emplace(h.key(), d + 1).second) queue.push_back(h);
    }
  }
  return dist;
}

inline std::vector<GroupElement> naive_ball_elements(const GenSet& gs, int radius) {
  std::vector<GroupElement> out;
  for (const auto& [key, d] : naive_ball(gs, radius)) out.push_back(GroupElement::from_key(key));
  return out;
}

// Sphere sizes of the standard marking: the convolution of two 4-regular tree
// sphere sizes s(0) = 1, s(i) = 4 * 3^(i-1).
inline std::uint64_t s1_sphere_size(int r) {
  auto tree = [](int i) -> std::uint64_t {
    if (i == 0) return 1;
    std::uint64_t v = 4;
    for (int j = 1; j < i; ++j) v *= 3;
    return v;
  };
  std::uint64_t total = 0;
  for (int i = 0; i <= r; ++i) total += tree(i) * tree(r - i);
  return total;
}

// All words of a given length.
inline std::vector<GenWord> all_words(std::size_t len) {
  std::vector<GenWord> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= GenSet::kEdges;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> edges(len);
    std::size_t c = code;
    for (std::size_t i = len; i-- > 0;) {
      edges[i] = static_cast<std::uint8_t>(c % GenSet::kEdges);
      c /= GenSet::kEdges;
    }
    out.emplace_back(std::move(edges));
  }
  return out;
}

// Membership test d(x, y) <= rho against a naive ball key set.
struct NaiveWithin {
  std::set<std::string> keys;
  NaiveWithin(const GenSet& gs, int rho) {
    if (rho >= 0)
      for (const auto& [key, d] : naive_ball(gs, rho)) keys.insert(key);
  }
  bool operator()(const GroupElement& x, const GroupElement& y) const {
    return keys.count((x.inverse() * y).key()) > 0;
  }
};

// Every word of length <= max_len grouped by value, for exhaustive searches.
class WordTable {
 public:
  WordTable(const GenSet& gs, std::size_t max_len) : gs_(gs) {
    for (std::size_t len = 0; len <= max_len; ++len)
      for (auto& w : all_words(len)) by_value_[eval_word(gs, w).key()].push_back(std::move(w));
  }

  // Words of the given value in (length, lexicographic edge) order.
  const std::vector<GenWord>& words_for(const GroupElement& g) const {
    static const std::vector<GenWord> none;
    auto it = by_value_.find(g.key());
    return it == by_value_.end() ? none : it->second;
  }

  const NaiveWithin& within(int rho) const {
    auto it = within_.find(rho);
    if (it == within_.end()) it = within_.emplace(rho, NaiveWithin(gs_, rho)).first;
    return it->second;
  }

  // Least length m < n of a loop u_0..u_m fellow travelling the loop with
  // vertices v, trying every trivial word of length < n from every
  // admissible start.
  std::optional<int> shorter_loop(const std::vector<GroupElement>& v, int k, bool strict, bool basepoint) const {
    const int rho = strict ? k - 1 : k;
    if (rho < 0) return std::nullopt;
    const NaiveWithin& near = within(rho);
    const std::size_t n = v.size() - 1;
    std::vector<GroupElement> starts;
    if (basepoint)
      starts = {v[0]};
    else
      for (const auto& off : naive_ball_elements(gs_, rho)) starts.push_back(v[0] * off);
    std::optional<int> best;
    for (const auto& w : words_for(GroupElement::identity())) {
      const std::size_t m = w.size();
      if (m >= n || (best && static_cast<int>(m) >= *best)) continue;
      for (const auto& u0 : starts) {
        auto u = path_vertices(gs_, u0, w);
        bool ok = true;
        for (std::size_t j = 0; j <= n && ok; ++j) ok = near(u[std::min(j, m)], v[j]);
        if (ok) {
          best = static_cast<int>(m);
          break;
        }
      }
    }
    return best;
  }

  // Least length of a word with the same value as w whose padded path
  // fellow travels w's path with d <= k.
  std::optional<int> fftp(const GenWord& w, int k) const {
    const NaiveWithin& near = within(k);
    const auto wv = path_vertices(gs_, GroupElement::identity(), w);
    std::optional<int> best;
    for (const auto& u : words_for(eval_word(gs_, w))) {
      const std::size_t m = u.size();
      if (m >= w.size() || (best && static_cast<int>(m) >= *best)) continue;
      auto uv = path_vertices(gs_, GroupElement::identity(), u);
      bool ok = true;
      for (std::size_t j = 0; j < wv.size() && ok; ++j) ok = near(uv[std::min(j, m)], wv[j]);
      if (ok) best = static_cast<int>(m);
    }
    return best;
  }

  // Geodesic length of g if some word of length <= max_len reaches it.
  std::optional<int> length(const GroupElement& g) const {
    const auto& ws = words_for(g);
    if (ws.empty()) return std::nullopt;
    return static_cast<int>(ws.front().size());
  }

 private:
  GenSet gs_;
  std::map<std::string, std::vector<GenWord>> by_value_;
  mutable std::map<int, NaiveWithin> within_;
};

// Shortest path inside a key set by plain BFS.
inline std::optional<int> naive_inside_distance(const GenSet& gs, const std::map<std::string, int>& ball, int limit,
                                                const GroupElement& u, const GroupElement& v) {
  std::map<std::string, int> dist{{u.key(), 0}};
  std::deque<GroupElement> queue{u};
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    const int d = dist[g.key()];
    if (g == v) return d;
    for (int e = 0; e < GenSet::kEdges; ++e) {
      GroupElement h = g * gs.edge(e);
      auto it = ball.find(h.key());
      if (it == ball.end() || it->second > limit) continue;
      if (dist.emplace(h.key(), d + 1).second) queue.push_back(h);
    }
  }
  return std::nullopt;
}

inline GenWord random_word(std::mt19937& rng, std::size_t max_len, int generators = GenSet::kGenerators) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> edge_dist(0, 2 * generators - 1);
  std::vector<std::uint8_t> edges(len_dist(rng));
  for (auto& e : edges) e = static_cast<std::uint8_t>(edge_dist(rng));
  return GenWord(std::move(edges));
}

}  // namespace cayley::oracle
