#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/ball.hpp"
#include "cayley/metric.hpp"

namespace cayley {

// Graph distance d(x, y) = |x^{-1} y|, or nullopt (beyond cap) when it exceeds cap.
std::optional<int> distance(const GenSet& gs, const GroupElement& x, const GroupElement& y, int cap,
                            const ResourceLimits& limits = {});

// Length of a shortest path from u to v whose vertices all lie in B(limit)
// (limit defaults to the ball radius and may not exceed it). nullopt when no
// such path exists. Throws InputError if u or v lies outside B(limit).
std::optional<int> inside_distance(const BallIndex& ball, const GroupElement& u, const GroupElement& v,
                                   std::optional<int> limit = std::nullopt);

// Breadth-first search from `source` inside B(limit) that stops once every
// target is settled. Result is aligned with `targets`.
std::vector<std::optional<int>> inside_distances(const BallIndex& ball, BallIndex::Index source,
                                                 std::span<const BallIndex::Index> targets, int limit);

struct SpherePair {
  BallIndex::Index u;
  BallIndex::Index v;
  int distance;  // 1 or 2
};

// Unordered pairs on Sph(r) at graph distance 1 or 2, each once, u before v in
// key order. Requires ball radius >= r + 1 so that midpoints on Sph(r + 1)
// are visible.
std::vector<SpherePair> sphere_pairs_leq2(const BallIndex& ball, int r);

// Synchronous fellow travelling of the paths start_p*p and start_q*q: every
// index j has d(p_j, q_j) < k (strict) or <= k, the shorter path padded with
// its final vertex.
bool fellow_travel_check(const GenSet& gs, const GenWord& p, const GenWord& q, int k, bool strict);
bool fellow_travel_check(const Metric& metric, const GroupElement& start_p, const GenWord& p,
                         const GroupElement& start_q, const GenWord& q, int k, bool strict);

// A closed edge path of length n >= 1.
class Loop {
 public:
  // Throws InputError unless the word is non-empty and evaluates to the identity.
  Loop(GenSet gs, GroupElement base, GenWord word);

  const GenSet& genset() const { return genset_; }
  const GroupElement& base() const { return base_; }
  const GenWord& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::vector<GroupElement> vertices() const { return path_vertices(genset_, base_, word_); }

 private:
  GenSet genset_;
  GroupElement base_;
  GenWord word_;
};

// A loop u_0 ... u_m (word of length m) starting at `base`.
struct ShorterLoop {
  GroupElement base;
  GenWord word;
};

// Searches for a loop of length m < n that synchronously fellow travels L:
// d(u_j, v_j) within the corridor for j <= m, d(u_m, v_j) within it for
// m <= j <= n, and u_0 = v_0 when basepoint_fixed. The corridor radius is
// k - 1 when strict, else k. nullopt means no such loop of any length < n.
//
// The search is exhaustive: for every admissible start it propagates the full
// reachable set layer by layer through the corridor. Among solutions it
// returns the one with the smallest m, then the smallest start key, then the
// key-lexicographically least vertex sequence.
std::optional<ShorterLoop> loop_shorten_search(const Loop& loop, int k, bool strict, bool basepoint_fixed,
                                               const ResourceLimits& limits = {});
// Same, reusing a metric whose radius covers the corridor radius.
std::optional<ShorterLoop> loop_shorten_search(const Metric& metric, const Loop& loop, int k, bool strict,
                                               bool basepoint_fixed, const ResourceLimits& limits = {});

// Direct check of every condition loop_shorten_search imposes on a candidate.
// Metric radius must cover the corridor radius.
bool is_fellow_travelling_shorter_loop(const Metric& metric, const Loop& loop, const ShorterLoop& candidate, int k,
                                       bool strict, bool basepoint_fixed);

// Direct check of every condition fftp_falsify imposes on a candidate.
bool is_fellow_travelling_shortening(const Metric& metric, const GenWord& w, const GenWord& candidate, int k);

// |eval(w)| == |w|.
bool geodesic_check(const GenSet& gs, const GenWord& w, const ResourceLimits& limits = {});
// Same, with a metric of radius >= ceil(|w| / 2).
bool geodesic_check(const Metric& metric, const GenWord& w);

// A strictly shorter word with the same value whose path (padded) k-fellow
// travels w under the non-strict bound, or nullopt when none exists. Same
// exhaustiveness and tie-breaking as loop_shorten_search. Throws InputError
// if w is geodesic.
std::optional<GenWord> fftp_falsify(const GenSet& gs, const GenWord& w, int k, const ResourceLimits& limits = {});
// Metric radius must cover both k and ceil(|w| / 2).
std::optional<GenWord> fftp_falsify(const Metric& metric, const GenWord& w, int k,
                                    const ResourceLimits& limits = {});

// DOT rendering of B(r): nodes keyed by canonical key, one undirected edge
// per generator edge, highlighted nodes drawn bold.
std::string export_dot(const BallIndex& ball, int r, std::span<const GroupElement> highlight = {});

}  // namespace cayley
