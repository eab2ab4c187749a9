#include "corridor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

namespace cayley::detail {

namespace {

using Id = std::uint32_t;
constexpr Id kNone = UINT32_MAX;

// Interned corridor vertices with their generator adjacency.
struct CorridorGraph {
  std::vector<GroupElement> elements;
  std::unordered_map<GroupElement, Id, GroupElementHash> ids;
  std::vector<Id> adjacency;
  std::vector<std::uint8_t> membership;  // layer-major: membership[j * size + id]
  std::vector<std::size_t> tail_from;    // smallest j with id in C_i for all i >= j
  std::vector<std::size_t> rank;         // position in canonical key order
  std::size_t layers = 0;

  Id intern(const GroupElement& g) {
    auto [it, inserted] = ids.emplace(g, static_cast<Id>(elements.size()));
    if (inserted) elements.push_back(g);
    return it->second;
  }
  std::optional<Id> find(const GroupElement& g) const {
    auto it = ids.find(g);
    if (it == ids.end()) return std::nullopt;
    return it->second;
  }
  bool in_layer(std::size_t j, Id id) const { return membership[j * elements.size() + id] != 0; }
  Id next(Id id, int e) const { return adjacency[static_cast<std::size_t>(id) * GenSet::kEdges + e]; }
};

CorridorGraph build_graph(const CorridorProblem& p, const ResourceLimits& limits) {
  CorridorGraph g;
  g.layers = p.centers.size();
  std::vector<std::vector<Id>> members(g.layers);
  for (std::size_t j = 0; j < g.layers; ++j) {
    members[j].reserve(p.offsets.size());
    for (const auto& off : p.offsets) members[j].push_back(g.intern(p.centers[j] * off));
  }
  limits.check_size(g.elements.size());
  const std::size_t n = g.elements.size();
  g.membership.assign(g.layers * n, 0);
  for (std::size_t j = 0; j < g.layers; ++j)
    for (Id id : members[j]) g.membership[j * n + id] = 1;
  g.adjacency.assign(n * GenSet::kEdges, kNone);
  for (Id id = 0; id < n; ++id)
    for (int e = 0; e < GenSet::kEdges; ++e)
      if (auto nb = g.find(g.elements[id] * p.genset->edge(e))) g.adjacency[static_cast<std::size_t>(id) * GenSet::kEdges + e] = *nb;
  g.tail_from.assign(n, g.layers);
  for (Id id = 0; id < n; ++id) {
    std::size_t j = g.layers;
    while (j > 0 && g.in_layer(j - 1, id)) --j;
    g.tail_from[id] = j;
  }
  std::vector<std::string> keys(n);
  for (Id id = 0; id < n; ++id) keys[id] = g.elements[id].key();
  std::vector<Id> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Id x, Id y) { return keys[x] < keys[y]; });
  g.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.rank[order[i]] = i;
  return g;
}

// Key-least path from `start` to `end` of exactly `length` steps inside the corridor.
GenWord reconstruct(const CorridorGraph& g, Id start, Id end, std::size_t length) {
  const std::size_t n = g.elements.size();
  std::vector<std::vector<std::uint8_t>> reach(length + 1, std::vector<std::uint8_t>(n, 0));
  std::vector<std::vector<Id>> layer(length + 1);
  reach[0][start] = 1;
  layer[0] = {start};
  for (std::size_t j = 0; j < length; ++j)
    for (Id u : layer[j])
      for (int e = 0; e < GenSet::kEdges; ++e) {
        Id v = g.next(u, e);
        if (v != kNone && g.in_layer(j + 1, v) && !reach[j + 1][v]) {
          reach[j + 1][v] = 1;
          layer[j + 1].push_back(v);
        }
      }
  // Keep only vertices that can still reach the end on time.
  std::vector<std::vector<std::uint8_t>> good(length + 1, std::vector<std::uint8_t>(n, 0));
  good[length][end] = 1;
  for (std::size_t j = length; j-- > 0;)
    for (Id u : layer[j])
      for (int e = 0; e < GenSet::kEdges; ++e) {
        Id v = g.next(u, e);
        if (v != kNone && good[j + 1][v]) {
          good[j][u] = 1;
          break;
        }
      }
  std::vector<std::uint8_t> edges;
  Id cur = start;
  for (std::size_t j = 0; j < length; ++j) {
    int best_edge = -1;
    Id best = kNone;
    for (int e = 0; e < GenSet::kEdges; ++e) {
      Id v = g.next(cur, e);
      if (v != kNone && good[j + 1][v] && (best == kNone || g.rank[v] < g.rank[best])) {
        best = v;
        best_edge = e;
      }
    }
    edges.push_back(static_cast<std::uint8_t>(best_edge));
    cur = best;
  }
  return GenWord(std::move(edges));
}

}  // namespace

std::optional<CorridorSolution> solve_corridor(const CorridorProblem& p, const ResourceLimits& limits) {
  if (p.centers.empty() || p.offsets.empty()) return std::nullopt;
  CorridorGraph g = build_graph(p, limits);

  std::optional<Id> target;
  if (p.target) {
    target = g.find(*p.target);
    if (!target || g.tail_from[*target] > p.max_length) return std::nullopt;
  }

  std::vector<Id> starts;
  for (const auto& s : p.starts) {
    auto id = g.find(s);
    if (!id || !g.in_layer(0, *id)) continue;
    if (!target && g.tail_from[*id] > p.max_length) continue;
    starts.push_back(*id);
  }
  std::sort(starts.begin(), starts.end(), [&](Id x, Id y) { return g.rank[x] < g.rank[y]; });
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  const std::size_t n = g.elements.size();
  std::vector<std::vector<Id>> current(starts.size());
  std::vector<std::uint8_t> at_end(starts.size(), 0);
  for (std::size_t s = 0; s < starts.size(); ++s) {
    current[s] = {starts[s]};
    at_end[s] = (target ? *target : starts[s]) == starts[s];
  }
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t clock = 0;

  for (std::size_t m = 0;; ++m) {
    for (std::size_t s = 0; s < starts.size(); ++s) {
      Id end = target ? *target : starts[s];
      if (at_end[s] && g.tail_from[end] <= m)
        return CorridorSolution{g.elements[starts[s]], reconstruct(g, starts[s], end, m)};
    }
    if (m == p.max_length || m + 1 >= g.layers) return std::nullopt;
    bool alive = false;
    for (std::size_t s = 0; s < starts.size(); ++s) {
      if (current[s].empty()) {
        at_end[s] = 0;
        continue;
      }
      ++clock;
      std::vector<Id> next;
      for (Id u : current[s])
        for (int e = 0; e < GenSet::kEdges; ++e) {
          Id v = g.next(u, e);
          if (v != kNone && stamp[v] != clock && g.in_layer(m + 1, v)) {
            stamp[v] = clock;
            next.push_back(v);
          }
        }
      Id end = target ? *target : starts[s];
      at_end[s] = stamp[end] == clock;
      current[s] = std::move(next);
      alive = alive || !current[s].empty();
    }
    limits.check_deadline();
    if (!alive) return std::nullopt;
  }
}

}  // namespace cayley::detail
