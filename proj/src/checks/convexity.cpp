#include <algorithm>
#include <map>

#include "cayley/checks.hpp"
#include "cayley/error.hpp"

namespace cayley {

using nlohmann::json;

namespace {

struct PairScan {
  int max_inside = 0;  // -1 encodes "no path inside the ball"
  std::size_t pairs = 0;
  std::vector<std::pair<SpherePair, std::optional<int>>> attaining;
};

int encode(std::optional<int> inside) { return inside ? *inside : INT32_MAX; }

// Inside distances for every sphere pair at radius r; the ball must have radius >= r + 1.
PairScan scan_pairs(const BallIndex& ball, int r, const ResourceLimits& limits) {
  PairScan scan;
  std::vector<SpherePair> pairs = sphere_pairs_leq2(ball, r);
  scan.pairs = pairs.size();
  int best = -1;
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i;
    std::vector<BallIndex::Index> targets;
    while (j < pairs.size() && pairs[j].u == pairs[i].u) targets.push_back(pairs[j++].v);
    auto inside = inside_distances(ball, pairs[i].u, targets, r);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const int value = encode(inside[t]);
      if (value > best) {
        best = value;
        scan.attaining.clear();
      }
      if (value == best && scan.attaining.size() < kWitnessCap) scan.attaining.emplace_back(pairs[i + t], inside[t]);
    }
    i = j;
    limits.check_deadline();
  }
  scan.max_inside = best == INT32_MAX ? -1 : std::max(best, 0);
  return scan;
}

}  // namespace

CheckReport check_ac_radius(const GenSet& gs, int r, int f_value, const ResourceLimits& limits) {
  if (r < 1) throw InputError("almost convexity radius must be at least 1");
  Stopwatch clock;
  CheckReport report = check_ac_radius(build_ball(gs, r + 1, limits), r, f_value, limits);
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

CheckReport check_ac_radius(const BallIndex& ball, int r, int f_value, const ResourceLimits& limits) {
  if (r < 1) throw InputError("almost convexity radius must be at least 1");
  Stopwatch clock;
  const GenSet& gs = ball.genset();
  PairScan scan = scan_pairs(ball, r, limits);

  CheckReport report;
  report.command = "check-ac";
  report.genset = gs.name();
  report.params = {{"r", r}, {"f_value", f_value}};
  const bool unreachable = scan.max_inside < 0;
  report.verdict = (!unreachable && scan.max_inside <= f_value) ? verdict::holds : verdict::fails;
  for (const auto& [pair, inside] : scan.attaining) {
    report.witnesses.push_back({{"kind", "sphere_pair"},
                                {"r", r},
                                {"u", ball.element(pair.u).key()},
                                {"v", ball.element(pair.v).key()},
                                {"distance", pair.distance},
                                {"inside_distance", inside ? json(*inside) : json(nullptr)},
                                {"f_value", f_value},
                                {"exceeds_f", !inside || *inside > f_value}});
  }
  report.stats.ball_size = static_cast<std::int64_t>(ball.sphere_range(r).second);
  report.stats.pairs_examined = static_cast<std::int64_t>(scan.pairs);
  if (!unreachable) report.stats.max_inside_distance = scan.max_inside;
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

CheckReport check_mac_radius(const GenSet& gs, int r, const ResourceLimits& limits) {
  CheckReport report = check_ac_radius(gs, r, 2 * r - 1, limits);
  report.command = "check-mac";
  return report;
}

CheckReport check_mac_radius(const BallIndex& ball, int r, const ResourceLimits& limits) {
  CheckReport report = check_ac_radius(ball, r, 2 * r - 1, limits);
  report.command = "check-mac";
  return report;
}

CheckReport check_mprimeac_radius(const GenSet& gs, int r, const ResourceLimits& limits) {
  CheckReport report = check_ac_radius(gs, r, 2 * r - 2, limits);
  report.command = "check-mprimeac";
  return report;
}

CheckReport check_mprimeac_radius(const BallIndex& ball, int r, const ResourceLimits& limits) {
  CheckReport report = check_ac_radius(ball, r, 2 * r - 2, limits);
  report.command = "check-mprimeac";
  return report;
}

std::vector<ProfilePoint> convexity_profile(const GenSet& gs, int r_max, const ResourceLimits& limits) {
  if (r_max < 1) throw InputError("profile needs r_max >= 1");
  return convexity_profile(build_ball(gs, r_max + 1, limits), r_max, limits);
}

std::vector<ProfilePoint> convexity_profile(const BallIndex& ball, int r_max, const ResourceLimits& limits) {
  if (r_max < 1) throw InputError("profile needs r_max >= 1");
  std::vector<ProfilePoint> out;
  for (int r = 1; r <= r_max; ++r) {
    PairScan scan = scan_pairs(ball, r, limits);
    out.push_back({r, scan.max_inside, scan.pairs});
  }
  return out;
}

CheckReport profile_report(const BallIndex& ball, int r_max, const ResourceLimits& limits) {
  Stopwatch clock;
  auto points = convexity_profile(ball, r_max, limits);
  CheckReport report;
  report.command = "profile";
  report.genset = ball.genset().name();
  report.params = {{"rmax", r_max}};
  report.verdict = verdict::computed;
  std::int64_t pairs = 0, best = 0;
  for (const auto& p : points) {
    report.witnesses.push_back(
        {{"kind", "profile_point"}, {"r", p.r}, {"max_inside_distance", p.max_inside_distance}, {"pairs", p.pairs}});
    pairs += static_cast<std::int64_t>(p.pairs);
    best = std::max<std::int64_t>(best, p.max_inside_distance);
  }
  report.stats.ball_size = static_cast<std::int64_t>(ball.sphere_range(r_max).second);
  report.stats.pairs_examined = pairs;
  report.stats.max_inside_distance = best;
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cayley
