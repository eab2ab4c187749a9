#include <algorithm>

#include "cayley/checks.hpp"
#include "cayley/error.hpp"

namespace cayley {

using nlohmann::json;

namespace {

// All words of length len in lexicographic edge order.
template <typename Fn>
void for_each_word(std::size_t len, Fn&& fn) {
  std::vector<std::uint8_t> edges(len, 0);
  if (len == 0) {
    fn(GenWord());
    return;
  }
  while (true) {
    fn(GenWord(edges));
    bool carry = true;
    for (auto it = edges.rbegin(); carry && it != edges.rend(); ++it) {
      carry = ++*it == GenSet::kEdges;
      if (carry) *it = 0;
    }
    if (carry) return;
  }
}

}  // namespace

CheckReport fftp_scan(const GenSet& gs, int max_len, int k, const ResourceLimits& limits) {
  if (max_len < 0 || max_len > 6) throw InputError("fftp scan supports word lengths 0..6");
  if (k < 0) throw InputError("fellow-travel bound k must be non-negative");
  Stopwatch clock;
  const int search_bound = std::max(k, max_len);
  Metric metric(gs, search_bound, limits);

  std::size_t non_geodesic = 0;
  std::vector<json> counterexamples;
  std::size_t failures = 0;
  std::optional<int> corpus_k = 0;  // nullopt once some word needs more than search_bound
  GenWord hardest;
  for (int len = 0; len <= max_len; ++len) {
    for_each_word(static_cast<std::size_t>(len), [&](const GenWord& w) {
      if (geodesic_check(metric, w)) return;
      ++non_geodesic;
      if (!fftp_falsify(metric, w, k, limits)) {
        ++failures;
        if (counterexamples.size() < kWitnessCap)
          counterexamples.push_back({{"kind", "fftp_counterexample"}, {"word", w.str(gs)}, {"k", k}});
      }
      if (corpus_k) {
        int least = -1;
        for (int kk = 0; kk <= search_bound; ++kk)
          if (fftp_falsify(metric, w, kk, limits)) {
            least = kk;
            break;
          }
        if (least < 0) {
          corpus_k.reset();
          hardest = w;
        } else if (least > *corpus_k) {
          corpus_k = least;
          hardest = w;
        }
      }
    });
    limits.check_deadline();
  }

  CheckReport report;
  report.command = "fftp-scan";
  report.genset = gs.name();
  report.params = {{"maxlen", max_len}, {"k", k}, {"min_k_search_bound", search_bound}};
  report.verdict = failures == 0 ? verdict::holds : verdict::fails;
  report.witnesses = std::move(counterexamples);
  if (non_geodesic > 0 && corpus_k && *corpus_k > 0)
    report.witnesses.push_back({{"kind", "minimal_k"}, {"word", hardest.str(gs)}, {"k", *corpus_k}});
  report.params["min_k"] = corpus_k ? json(corpus_k.value()) : json(nullptr);
  report.params["non_geodesic_words"] = non_geodesic;
  report.params["failures"] = failures;
  report.stats.ball_size = static_cast<std::int64_t>(metric.ball().size());
  report.stats.pairs_examined = static_cast<std::int64_t>(non_geodesic);
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

CheckReport lsp_scan(const GenSet& gs, std::span<const Loop> corpus, int k, bool basepoint, bool strict,
                     const ResourceLimits& limits) {
  if (k < 1) throw InputError("fellow-travel bound k must be at least 1");
  Stopwatch clock;
  Metric metric(gs, strict ? k - 1 : k, limits);
  std::size_t examined = 0, failures = 0;
  CheckReport report;
  for (const auto& loop : corpus) {
    if (!loop.genset().same_marking(gs)) throw InputError("corpus loop uses a different marking");
    if (loop.length() < 2) continue;
    ++examined;
    if (loop_shorten_search(metric, loop, k, strict, basepoint, limits)) continue;
    ++failures;
    if (report.witnesses.size() < kWitnessCap)
      report.witnesses.push_back({{"kind", "unshortenable_loop"},
                                  {"base", loop.base().key()},
                                  {"word", loop.word().str(gs)},
                                  {"k", k},
                                  {"strict", strict},
                                  {"basepoint", basepoint}});
  }
  report.command = "lsp-scan";
  report.genset = gs.name();
  report.params = {{"k", k},
                   {"strict", strict},
                   {"basepoint", basepoint},
                   {"corpus_size", corpus.size()},
                   {"failures", failures}};
  report.verdict = failures == 0 ? verdict::holds : verdict::fails;
  report.stats.ball_size = static_cast<std::int64_t>(metric.ball().size());
  report.stats.pairs_examined = static_cast<std::int64_t>(examined);
  report.stats.runtime_ms = clock.elapsed_ms();
  return report;
}

std::vector<GenWord> relator_words(const GenSet& gs) {
  std::vector<std::string> text;
  if (gs.same_marking(GenSet::standard()))
    text = {"acAC", "bcBC", "adAD", "bdBD"};
  else if (gs.is_hnn())
    text = {"acAC", "bcBC", "actCAT", "bctCBT"};
  std::vector<GenWord> out;
  for (const auto& t : text) out.push_back(GenWord::parse(gs, t));
  return out;
}

std::vector<Loop> default_loop_corpus(const GenSet& gs, int k) {
  std::vector<Loop> out;
  for (std::size_t len = 2; len <= 4; ++len)
    for_each_word(len, [&](const GenWord& w) {
      if (eval_word(gs, w).is_identity()) out.emplace_back(gs, GroupElement::identity(), w);
    });
  for (const auto& r : relator_words(gs)) out.emplace_back(gs, GroupElement::identity(), r + r);
  if (gs.is_hnn() && k >= 1) out.push_back(unshortenable_loop(k));
  return out;
}

}  // namespace cayley
