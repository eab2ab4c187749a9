#pragma once

// Exhaustive search for short edge paths confined to a moving corridor
// C_j = centers[j] * offsets, j = 0..n.

#include <cstddef>
#include <optional>
#include <vector>

#include "cayley/genset.hpp"
#include "cayley/limits.hpp"

namespace cayley::detail {

struct CorridorProblem {
  const GenSet* genset = nullptr;
  std::vector<GroupElement> centers;   // v_0 .. v_n
  std::vector<GroupElement> offsets;   // the ball B(rho)
  std::vector<GroupElement> starts;    // candidate u_0, each in C_0
  std::optional<GroupElement> target;  // endpoint; nullopt = return to the start
  std::size_t max_length = 0;          // accept m <= max_length
};

struct CorridorSolution {
  GroupElement start;
  GenWord word;
};

// A path u_0..u_m with u_j in C_j, ending at the target (or at u_0) and with
// u_m in C_j for every j in [m, n]. Smallest m wins, then the smallest start
// key, then the key-lexicographically least vertex sequence.
std::optional<CorridorSolution> solve_corridor(const CorridorProblem& problem, const ResourceLimits& limits);

}  // namespace cayley::detail
