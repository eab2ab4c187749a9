#include <string>

#include "cayley/checks.hpp"
#include "cayley/error.hpp"

namespace cayley {

using nlohmann::json;

namespace {

std::string power(char letter, int n) { return std::string(static_cast<std::size_t>(n), letter); }

}  // namespace

std::pair<GroupElement, GroupElement> mac_witness_pair(int n) {
  if (n < 1) throw InputError("witness index n must be at least 1");
  const GenSet s2 = GenSet::hnn();
  return {eval_word(s2, power('a', n) + power('B', n)), eval_word(s2, "t" + power('a', n) + power('B', n - 1))};
}

CheckReport verify_mac_failure(int n, const ResourceLimits& limits) {
  if (n < 1) throw InputError("witness index n must be at least 1");
  return verify_mac_failure(n, std::make_shared<const BallIndex>(build_ball(GenSet::hnn(), 2 * n, limits)), limits);
}

CheckReport verify_mac_failure(int n, std::shared_ptr<const BallIndex> ball_ptr, const ResourceLimits& limits) {
  Stopwatch clock;
  auto [u, v] = mac_witness_pair(n);
  const int r = 2 * n;
  if (!ball_ptr || !ball_ptr->genset().is_hnn() || ball_ptr->radius() != r)
    throw InputError("verification needs the s2 ball of radius " + std::to_string(r));
  (void)limits;
  Metric metric(std::move(ball_ptr));
  const BallIndex& ball = metric.ball();
  auto len_u = ball.distance_of(u), len_v = ball.distance_of(v);
  auto d = metric.distance(u, v);
  std::optional<int> inside;
  if (len_u && len_v) inside = inside_distance(ball, u, v);

  const bool confirmed = len_u == r && len_v == r && d == 2 && inside == 4 * n && 4 * n > 2 * r - 1;
  CheckReport report;
  report.command = "verify-thm2";
  report.genset = "s2";
  report.params = {{"n", n}, {"r", r}, {"f_value", 2 * r - 1}};
  report.verdict = confirmed ? "MAC_FAILS_AT_RADIUS_" + std::to_string(r) : verdict::verification_failed;
  auto opt = [](std::optional<int> x) { return x ? json(*x) : json(nullptr); };
  report.witnesses.push_back({{"kind", "mac_witness_pair"},
                              {"n", n},
                              {"u", u.key()},
                              {"v", v.key()},
                              {"u_length", opt(len_u)},
                              {"v_length", opt(len_v)},
                              {"distance", opt(d)},
                              {"inside_distance", opt(inside)}});
  report.stats.ball_size = static_cast<std::int64_t>(ball.size());
  report.stats.pairs_examined = 1;
  if (inside) report.stats.max_inside_distance = *inside;
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

Loop unshortenable_loop(int k) {
  if (k < 1) throw InputError("loop parameter k must be at least 1");
  const std::string word = power('a', 2 * k) + power('B', 4 * k) + power('a', 2 * k) + "t" + power('A', 2 * k) +
                           power('b', 4 * k) + power('A', 2 * k) + "T";
  const GenSet s2 = GenSet::hnn();
  return Loop(s2, GroupElement::identity(), GenWord::parse(s2, word));
}

std::vector<GroupElement> unshortenable_loop_checkpoints(int k) {
  if (k < 1) throw InputError("loop parameter k must be at least 1");
  const GenSet s2 = GenSet::hnn();
  const std::string mid = power('a', 2 * k) + power('B', 4 * k) + power('a', k);
  return {eval_word(s2, power('a', k)), eval_word(s2, mid), eval_word(s2, "t" + mid),
          eval_word(s2, "t" + power('a', k))};
}

CheckReport verify_lsp_failure(int k, bool basepoint, const ResourceLimits& limits) {
  Stopwatch clock;
  const Loop loop = unshortenable_loop(k);
  const GenSet& s2 = loop.genset();
  Metric metric(s2, k - 1, limits);
  auto found = loop_shorten_search(metric, loop, k, true, basepoint, limits);

  CheckReport report;
  report.command = "verify-thm3";
  report.genset = "s2";
  report.params = {{"k", k}, {"strict", true}, {"basepoint", basepoint}, {"loop_length", loop.length()}};
  const bool confirmed = !found && loop.length() == static_cast<std::size_t>(16 * k + 2);
  report.verdict = confirmed ? std::string(basepoint ? "BLSP" : "LSP") + "_FAILS_AT_K_" + std::to_string(k)
                             : verdict::verification_failed;
  json w = {{"kind", found ? "shorter_loop" : "unshortenable_loop"},
            {"base", loop.base().key()},
            {"word", loop.word().str(s2)},
            {"k", k},
            {"strict", true},
            {"basepoint", basepoint}};
  if (found) {
    w["shorter_base"] = found->base.key();
    w["shorter_word"] = found->word.str(s2);
  }
  report.witnesses.push_back(std::move(w));
  report.stats.ball_size = static_cast<std::int64_t>(metric.ball().size());
  report.stats.pairs_examined = 1;
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cayley
