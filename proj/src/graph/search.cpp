#include "cayley/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "cayley/error.hpp"
#include "corridor.hpp"

namespace cayley {

std::optional<int> distance(const GenSet& gs, const GroupElement& x, const GroupElement& y, int cap,
                            const ResourceLimits& limits) {
  if (cap < 0) throw InputError("distance cap must be non-negative");
  Metric metric(gs, (cap + 1) / 2, limits);
  auto d = metric.distance(x, y);
  if (d && *d <= cap) return d;
  return std::nullopt;
}

namespace {

int checked_limit(const BallIndex& ball, std::optional<int> limit) {
  int lim = limit.value_or(ball.radius());
  if (lim < 0 || lim > ball.radius()) throw InputError("inside-distance radius must lie in [0, ball radius]");
  return lim;
}

BallIndex::Index member_index(const BallIndex& ball, const GroupElement& g, int limit) {
  auto i = ball.index_of(g);
  if (!i || ball.distance(*i) > limit)
    throw InputError("element " + g.key() + " lies outside the ball of radius " + std::to_string(limit));
  return *i;
}

}  // namespace

std::vector<std::optional<int>> inside_distances(const BallIndex& ball, BallIndex::Index source,
                                                 std::span<const BallIndex::Index> targets, int limit) {
  std::vector<std::optional<int>> out(targets.size());
  std::map<BallIndex::Index, std::vector<std::size_t>> pending;
  for (std::size_t t = 0; t < targets.size(); ++t) pending[targets[t]].push_back(t);
  std::unordered_map<BallIndex::Index, int> dist;
  std::deque<BallIndex::Index> queue{source};
  dist[source] = 0;
  auto settle = [&](BallIndex::Index i, int d) {
    auto it = pending.find(i);
    if (it == pending.end()) return;
    for (auto t : it->second) out[t] = d;
    pending.erase(it);
  };
  settle(source, 0);
  while (!queue.empty() && !pending.empty()) {
    auto u = queue.front();
    queue.pop_front();
    const int du = dist[u];
    for (int e = 0; e < GenSet::kEdges; ++e) {
      auto v = ball.neighbor(u, e);
      if (v == BallIndex::npos || ball.distance(v) > limit) continue;
      if (dist.emplace(v, du + 1).second) {
        settle(v, du + 1);
        queue.push_back(v);
      }
    }
  }
  return out;
}

std::optional<int> inside_distance(const BallIndex& ball, const GroupElement& u, const GroupElement& v,
                                   std::optional<int> limit) {
  const int lim = checked_limit(ball, limit);
  const auto iu = member_index(ball, u, lim);
  const auto iv = member_index(ball, v, lim);
  return inside_distances(ball, iu, std::span(&iv, 1), lim).front();
}

std::vector<SpherePair> sphere_pairs_leq2(const BallIndex& ball, int r) {
  if (r < 0) throw InputError("sphere radius must be non-negative");
  if (ball.radius() < r + 1)
    throw InputError("sphere pairs at radius " + std::to_string(r) + " need a ball of radius at least " +
                     std::to_string(r + 1));
  std::vector<SpherePair> out;
  auto [first, last] = ball.sphere_range(r);
  for (auto u = first; u < last; ++u) {
    std::map<BallIndex::Index, int> partners;
    for (int e = 0; e < GenSet::kEdges; ++e) {
      auto w = ball.neighbor(u, e);
      if (w == BallIndex::npos) continue;
      if (w > u && ball.distance(w) == r) partners[w] = 1;
      for (int f = 0; f < GenSet::kEdges; ++f) {
        auto v = ball.neighbor(w, f);
        if (v != BallIndex::npos && v > u && ball.distance(v) == r) partners.emplace(v, 2);
      }
    }
    for (auto [v, d] : partners) out.push_back({u, v, d});
  }
  return out;
}

bool fellow_travel_check(const Metric& metric, const GroupElement& start_p, const GenWord& p,
                         const GroupElement& start_q, const GenWord& q, int k, bool strict) {
  const int rho = strict ? k - 1 : k;
  if (rho < 0) return false;
  const GenSet& gs = metric.genset();
  auto pv = path_vertices(gs, start_p, p);
  auto qv = path_vertices(gs, start_q, q);
  const std::size_t len = std::max(pv.size(), qv.size());
  for (std::size_t j = 0; j < len; ++j) {
    const auto& x = pv[std::min(j, pv.size() - 1)];
    const auto& y = qv[std::min(j, qv.size() - 1)];
    if (!metric.within(x, y, rho)) return false;
  }
  return true;
}

bool fellow_travel_check(const GenSet& gs, const GenWord& p, const GenWord& q, int k, bool strict) {
  const int rho = strict ? k - 1 : k;
  if (rho < 0) return false;
  Metric metric(gs, rho);
  return fellow_travel_check(metric, GroupElement::identity(), p, GroupElement::identity(), q, k, strict);
}

Loop::Loop(GenSet gs, GroupElement base, GenWord word)
    : genset_(std::move(gs)), base_(std::move(base)), word_(std::move(word)) {
  if (word_.empty()) throw InputError("a loop needs at least one edge");
  if (!eval_word(genset_, word_).is_identity())
    throw InputError("word " + word_.str(genset_) + " does not evaluate to the identity");
}

std::optional<ShorterLoop> loop_shorten_search(const Metric& metric, const Loop& loop, int k, bool strict,
                                               bool basepoint_fixed, const ResourceLimits& limits) {
  if (k < 1) throw InputError("fellow-travel bound k must be at least 1");
  if (!metric.genset().same_marking(loop.genset())) throw InputError("metric and loop use different markings");
  const int rho = strict ? k - 1 : k;
  detail::CorridorProblem problem;
  problem.genset = &loop.genset();
  problem.centers = loop.vertices();
  problem.offsets = metric.offsets(rho);
  if (basepoint_fixed) {
    problem.starts = {loop.base()};
  } else {
    for (const auto& off : problem.offsets) problem.starts.push_back(loop.base() * off);
  }
  problem.max_length = loop.length() - 1;
  auto sol = detail::solve_corridor(problem, limits);
  if (!sol) return std::nullopt;
  return ShorterLoop{std::move(sol->start), std::move(sol->word)};
}

std::optional<ShorterLoop> loop_shorten_search(const Loop& loop, int k, bool strict, bool basepoint_fixed,
                                               const ResourceLimits& limits) {
  if (k < 1) throw InputError("fellow-travel bound k must be at least 1");
  Metric metric(loop.genset(), strict ? k - 1 : k, limits);
  return loop_shorten_search(metric, loop, k, strict, basepoint_fixed, limits);
}

bool is_fellow_travelling_shorter_loop(const Metric& metric, const Loop& loop, const ShorterLoop& candidate, int k,
                                       bool strict, bool basepoint_fixed) {
  if (candidate.word.size() >= loop.length()) return false;
  if (!eval_word(loop.genset(), candidate.word).is_identity()) return false;
  if (basepoint_fixed && !(candidate.base == loop.base())) return false;
  return fellow_travel_check(metric, loop.base(), loop.word(), candidate.base, candidate.word, k, strict);
}

bool is_fellow_travelling_shortening(const Metric& metric, const GenWord& w, const GenWord& candidate, int k) {
  const GenSet& gs = metric.genset();
  if (candidate.size() >= w.size()) return false;
  if (!(eval_word(gs, candidate) == eval_word(gs, w))) return false;
  return fellow_travel_check(metric, GroupElement::identity(), w, GroupElement::identity(), candidate, k, false);
}

bool geodesic_check(const Metric& metric, const GenWord& w) {
  if (2 * static_cast<std::size_t>(metric.radius()) < w.size()) throw InputError("metric radius too small for word");
  auto len = metric.length(eval_word(metric.genset(), w));
  return len && static_cast<std::size_t>(*len) == w.size();
}

bool geodesic_check(const GenSet& gs, const GenWord& w, const ResourceLimits& limits) {
  Metric metric(gs, static_cast<int>((w.size() + 1) / 2), limits);
  return geodesic_check(metric, w);
}

std::optional<GenWord> fftp_falsify(const Metric& metric, const GenWord& w, int k, const ResourceLimits& limits) {
  if (k < 0) throw InputError("fellow-travel bound k must be non-negative");
  if (geodesic_check(metric, w)) throw InputError("word " + w.str(metric.genset()) + " is already geodesic");
  detail::CorridorProblem problem;
  problem.genset = &metric.genset();
  problem.centers = path_vertices(metric.genset(), GroupElement::identity(), w);
  problem.offsets = metric.offsets(k);
  problem.starts = {GroupElement::identity()};
  problem.target = problem.centers.back();
  problem.max_length = w.size() - 1;
  auto sol = detail::solve_corridor(problem, limits);
  if (!sol) return std::nullopt;
  return std::move(sol->word);
}

std::optional<GenWord> fftp_falsify(const GenSet& gs, const GenWord& w, int k, const ResourceLimits& limits) {
  Metric metric(gs, std::max(k, static_cast<int>((w.size() + 1) / 2)), limits);
  return fftp_falsify(metric, w, k, limits);
}

std::string export_dot(const BallIndex& ball, int r, std::span<const GroupElement> highlight) {
  if (r < 0 || r > ball.radius()) throw InputError("export radius must lie in [0, ball radius]");
  const GenSet& gs = ball.genset();
  auto [first, last] = ball.sphere_range(r);
  (void)first;
  std::ostringstream out;
  out << "graph cayley {\n";
  out << "  // generating set " << gs.name() << ", ball of radius " << r << "\n";
  for (BallIndex::Index i = 0; i < last; ++i) {
    const auto& g = ball.element(i);
    bool bold = std::find(highlight.begin(), highlight.end(), g) != highlight.end();
    out << "  \"" << g.key() << "\" [dist=" << ball.distance(i);
    if (bold) out << ", style=bold, penwidth=3";
    out << "];\n";
  }
  for (BallIndex::Index i = 0; i < last; ++i)
    for (int e = 0; e < GenSet::kEdges; e += 2) {
      auto j = ball.neighbor(i, e);
      if (j == BallIndex::npos || j >= last) continue;
      out << "  \"" << ball.element(i).key() << "\" -- \"" << ball.element(j).key() << "\" [label=\""
          << gs.edge_label(e) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace cayley
