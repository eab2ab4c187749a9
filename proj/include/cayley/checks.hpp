#pragma once

// Per-radius and per-parameter instances of the almost convexity, fellow
// traveller and loop shortening properties, and verifiers for the two
// witness families separating the markings s1 and s2.

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cayley/report.hpp"
#include "cayley/search.hpp"

namespace cayley {

// AC_{f} at one radius: every pair u, v on Sph(r) with d(u, v) <= 2 is joined
// inside B(r) by a path of length <= f_value. Witnesses are the pairs
// attaining the maximal inside distance.
CheckReport check_ac_radius(const GenSet& gs, int r, int f_value, const ResourceLimits& limits = {});
// Same, on an existing ball of radius >= r + 1.
CheckReport check_ac_radius(const BallIndex& ball, int r, int f_value, const ResourceLimits& limits = {});
// f(r) = 2r - 1.
CheckReport check_mac_radius(const GenSet& gs, int r, const ResourceLimits& limits = {});
CheckReport check_mac_radius(const BallIndex& ball, int r, const ResourceLimits& limits = {});
// f(r) = 2r - 2.
CheckReport check_mprimeac_radius(const GenSet& gs, int r, const ResourceLimits& limits = {});
CheckReport check_mprimeac_radius(const BallIndex& ball, int r, const ResourceLimits& limits = {});

struct ProfilePoint {
  int r = 0;
  int max_inside_distance = 0;
  std::size_t pairs = 0;
  friend bool operator==(const ProfilePoint&, const ProfilePoint&) = default;
};
std::vector<ProfilePoint> convexity_profile(const GenSet& gs, int r_max, const ResourceLimits& limits = {});
// Ball radius must be >= r_max + 1.
std::vector<ProfilePoint> convexity_profile(const BallIndex& ball, int r_max, const ResourceLimits& limits = {});
CheckReport profile_report(const BallIndex& ball, int r_max, const ResourceLimits& limits = {});

// Under s2: u = a^n b^-n and v = t a^n b^-(n-1), both on Sph(2n), at distance
// 2, joined inside B(2n) only by paths of length >= 4n.
std::pair<GroupElement, GroupElement> mac_witness_pair(int n);
CheckReport verify_mac_failure(int n, const ResourceLimits& limits = {});
// Reuses an s2 ball of radius exactly 2n.
CheckReport verify_mac_failure(int n, std::shared_ptr<const BallIndex> ball, const ResourceLimits& limits = {});

// Under s2: the loop a^2k b^-4k a^2k t a^-2k b^4k a^-2k t^-1 at the identity,
// of length 16k + 2, which no shorter loop k-fellow travels.
Loop unshortenable_loop(int k);
// Checkpoints a^k, a^2k b^-4k a^k, t a^2k b^-4k a^k, t a^k along that loop.
std::vector<GroupElement> unshortenable_loop_checkpoints(int k);
// Strict corridor as in the loop shortening definition.
CheckReport verify_lsp_failure(int k, bool basepoint, const ResourceLimits& limits = {});

// Every non-geodesic word of length <= max_len is shortened within a
// non-strict k-corridor. Also reports the least k that works for the corpus.
CheckReport fftp_scan(const GenSet& gs, int max_len, int k, const ResourceLimits& limits = {});

// Every loop of length >= 2 in the corpus admits a shorter fellow-travelling loop.
CheckReport lsp_scan(const GenSet& gs, std::span<const Loop> corpus, int k, bool basepoint, bool strict = true,
                     const ResourceLimits& limits = {});

// All loops at the identity of length 2..4, the squares of the defining
// relator loops of s1/s2, and for s2 the unshortenable loop at this k.
std::vector<Loop> default_loop_corpus(const GenSet& gs, int k);

// Relator loops (lhs * rhs^-1) of the built-in presentations; empty otherwise.
std::vector<GenWord> relator_words(const GenSet& gs);

}  // namespace cayley
