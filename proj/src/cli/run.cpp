#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "cayley/checks.hpp"
#include "cayley/cli.hpp"
#include "cayley/error.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct RunConfig {
  std::string genset = "s1";
  bool json_output = false;
  std::string cache_dir;
  std::size_t max_elements = 5'000'000;
  int timeout_seconds = 0;

  ResourceLimits limits() const {
    if (max_elements == 0) throw InputError("--max-elements must be positive");
    if (timeout_seconds < 0) throw InputError("--timeout must be positive");
    if (timeout_seconds == 0) return ResourceLimits{max_elements, std::nullopt};
    return ResourceLimits::with_timeout(std::chrono::seconds(timeout_seconds), max_elements);
  }
};

std::shared_ptr<const BallIndex> obtain_ball(const GenSet& gs, int radius, const RunConfig& cfg,
                                             const ResourceLimits& limits) {
  if (cfg.cache_dir.empty()) return std::make_shared<const BallIndex>(build_ball(gs, radius, limits));
  const fs::path path = fs::path(cfg.cache_dir) / cache_file_name(gs, radius);
  if (fs::exists(path)) {
    BallIndex ball = load_ball_cache(path);
    if (ball.genset().name() != gs.name() || !ball.genset().same_marking(gs) || ball.radius() != radius)
      throw ValidationError("cache file " + path.string() + " does not hold the requested ball");
    return std::make_shared<const BallIndex>(std::move(ball));
  }
  auto ball = std::make_shared<const BallIndex>(build_ball(gs, radius, limits));
  fs::create_directories(cfg.cache_dir);
  save_ball_cache(*ball, path);
  return ball;
}

void print_human(const CheckReport& r, std::ostream& out) {
  out << "command: " << r.command << '\n';
  out << "genset: " << r.genset << '\n';
  for (auto it = r.params.begin(); it != r.params.end(); ++it) out << "  " << it.key() << " = " << it.value().dump() << '\n';
  for (const auto& w : r.witnesses) out << "witness: " << w.dump() << '\n';
  if (r.stats.ball_size) out << "ball_size: " << *r.stats.ball_size << '\n';
  if (r.stats.pairs_examined) out << "pairs_examined: " << *r.stats.pairs_examined << '\n';
  if (r.stats.max_inside_distance) out << "max_inside_distance: " << *r.stats.max_inside_distance << '\n';
  out << "runtime_ms: " << r.stats.runtime_ms << '\n';
  out << "verdict: " << r.verdict << '\n';
}

int emit(const CheckReport& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json_output) {
    out << to_json(r).dump(2) << '\n';
  } else {
    print_human(r, out);
  }
  return is_success_verdict(r.verdict) ? kSuccess : kVerdictFails;
}

CheckReport computed(const std::string& command, const GenSet& gs, json params) {
  CheckReport r;
  r.command = command;
  r.genset = gs.name();
  r.params = std::move(params);
  r.verdict = verdict::computed;
  return r;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = s.find(',', pos);
    out.push_back(s.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
    if (c == std::string::npos) return out;
    pos = c + 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cayley graph computations for F2 x F2 under the markings s1 and s2", "cayley"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_flag("--json", cfg.json_output, "Emit the versioned JSON report");
  app.add_option("--cache", cfg.cache_dir, "Directory for ball caches (TSV)");
  app.add_option("--max-elements", cfg.max_elements, "Cap on enumerated ball elements");
  app.add_option("--timeout", cfg.timeout_seconds, "Wall-clock limit in seconds (0 = none)");

  int radius = 0, n = 0, k = 0, rmax = 0, maxlen = 0;
  std::string word1, word2, word, out_file, highlight;
  bool basepoint = false, strict = false;

  auto genset_opt = [&](CLI::App* sub) { sub->add_option("--genset", cfg.genset, "s1 | s2 | custom:w1,w2,w3,w4")->required(); };

  auto* ball_cmd = app.add_subcommand("ball", "Enumerate a ball and print sphere sizes");
  genset_opt(ball_cmd);
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->add_option("--out", out_file, "Write the ball as a TSV cache file");

  auto* dist_cmd = app.add_subcommand("distance", "Graph distance between two words' endpoints");
  genset_opt(dist_cmd);
  dist_cmd->add_option("--word1", word1)->required();
  dist_cmd->add_option("--word2", word2)->required();

  auto* inside_cmd = app.add_subcommand("inside-distance", "Shortest path inside a ball");
  genset_opt(inside_cmd);
  inside_cmd->add_option("--radius", radius)->required();
  inside_cmd->add_option("--word1", word1)->required();
  inside_cmd->add_option("--word2", word2)->required();

  auto* mac_cmd = app.add_subcommand("check-mac", "Minimal almost convexity at one radius (f = 2r - 1)");
  genset_opt(mac_cmd);
  mac_cmd->add_option("--radius", radius)->required();

  auto* mpac_cmd = app.add_subcommand("check-mprimeac", "M'AC at one radius (f = 2r - 2)");
  genset_opt(mpac_cmd);
  mpac_cmd->add_option("--radius", radius)->required();

  auto* profile_cmd = app.add_subcommand("profile", "Maximal inside distance of sphere pairs per radius");
  genset_opt(profile_cmd);
  profile_cmd->add_option("--rmax", rmax)->required();

  auto* thm2_cmd = app.add_subcommand("verify-thm2", "Verify the s2 minimal almost convexity witness at radius 2n");
  thm2_cmd->add_option("--n", n)->required();

  auto* thm3_cmd = app.add_subcommand("verify-thm3", "Verify the s2 loop that no shorter loop k-fellow travels");
  thm3_cmd->add_option("--k", k)->required();
  thm3_cmd->add_flag("--basepoint", basepoint, "Require the shorter loop to keep the basepoint");

  auto* fftp_cmd = app.add_subcommand("fftp-scan", "Falsification by fellow travellers on all short words");
  genset_opt(fftp_cmd);
  fftp_cmd->add_option("--maxlen", maxlen)->required();
  fftp_cmd->add_option("--k", k)->required();

  auto* lsp_cmd = app.add_subcommand("lsp-scan", "Loop shortening on the default loop corpus");
  genset_opt(lsp_cmd);
  lsp_cmd->add_option("--k", k)->required();
  lsp_cmd->add_flag("--basepoint", basepoint);

  auto* shorten_cmd = app.add_subcommand("shorten-loop", "Search for a shorter fellow-travelling loop");
  genset_opt(shorten_cmd);
  shorten_cmd->add_option("--word", word)->required();
  shorten_cmd->add_option("--k", k)->required();
  shorten_cmd->add_flag("--strict", strict, "Use d < k instead of d <= k");
  shorten_cmd->add_flag("--basepoint", basepoint);

  auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a ball");
  genset_opt(dot_cmd);
  dot_cmd->add_option("--radius", radius)->required();
  dot_cmd->add_option("--highlight", highlight, "Comma-separated words to draw bold");
  dot_cmd->add_option("--out", out_file);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const ResourceLimits limits = cfg.limits();
    const GenSet gs = GenSet::parse(cfg.genset);
    auto elem = [&](const std::string& w) { return eval_word(gs, GenWord::parse(gs, w)); };

    if (*ball_cmd) {
      if (radius < 0) throw InputError("--radius must be non-negative");
      Stopwatch clock;
      auto ball = obtain_ball(gs, radius, cfg, limits);
      if (!out_file.empty()) save_ball_cache(*ball, out_file);
      CheckReport r = computed("ball", gs, {{"radius", radius}});
      r.witnesses.push_back({{"kind", "sphere_sizes"}, {"radius", radius}, {"sizes", ball->sphere_sizes()}});
      r.stats.ball_size = static_cast<std::int64_t>(ball->size());
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    if (*dist_cmd) {
      Stopwatch clock;
      const GroupElement u = elem(word1), v = elem(word2);
      const int cap = static_cast<int>(word1.size() + word2.size());
      auto d = distance(gs, u, v, cap, limits);
      if (!d) throw InputError("distance exceeds the path through the identity; inconsistent input");
      CheckReport r = computed("distance", gs, {{"word1", word1}, {"word2", word2}});
      r.witnesses.push_back({{"kind", "distance"}, {"u", u.key()}, {"v", v.key()}, {"distance", *d}});
      r.stats.runtime_ms = clock.elapsed_ms();
      if (!cfg.json_output) out << "distance: " << *d << '\n';
      return emit(r, cfg, out);
    }
    if (*inside_cmd) {
      if (radius < 0) throw InputError("--radius must be non-negative");
      Stopwatch clock;
      auto ball = obtain_ball(gs, radius, cfg, limits);
      const GroupElement u = elem(word1), v = elem(word2);
      auto d = inside_distance(*ball, u, v);
      CheckReport r = computed("inside-distance", gs, {{"radius", radius}, {"word1", word1}, {"word2", word2}});
      r.witnesses.push_back({{"kind", "inside_distance"},
                             {"radius", radius},
                             {"u", u.key()},
                             {"v", v.key()},
                             {"inside_distance", d ? json(*d) : json(nullptr)}});
      r.stats.ball_size = static_cast<std::int64_t>(ball->size());
      if (d) r.stats.max_inside_distance = *d;
      r.stats.runtime_ms = clock.elapsed_ms();
      if (!cfg.json_output) out << "inside_distance: " << (d ? std::to_string(*d) : "UNREACHABLE") << '\n';
      return emit(r, cfg, out);
    }
    if (*mac_cmd || *mpac_cmd) {
      if (radius < 1) throw InputError("--radius must be at least 1");
      Stopwatch clock;
      auto ball = obtain_ball(gs, radius + 1, cfg, limits);
      CheckReport r = *mac_cmd ? check_mac_radius(*ball, radius, limits) : check_mprimeac_radius(*ball, radius, limits);
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    if (*profile_cmd) {
      if (rmax < 1) throw InputError("--rmax must be at least 1");
      Stopwatch clock;
      auto ball = obtain_ball(gs, rmax + 1, cfg, limits);
      CheckReport r = profile_report(*ball, rmax, limits);
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    if (*thm2_cmd) {
      if (n < 1) throw InputError("--n must be at least 1");
      Stopwatch clock;
      CheckReport r = verify_mac_failure(n, obtain_ball(GenSet::hnn(), 2 * n, cfg, limits), limits);
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    if (*thm3_cmd) return emit(verify_lsp_failure(k, basepoint, limits), cfg, out);
    if (*fftp_cmd) return emit(fftp_scan(gs, maxlen, k, limits), cfg, out);
    if (*lsp_cmd) {
      auto corpus = default_loop_corpus(gs, k);
      return emit(lsp_scan(gs, corpus, k, basepoint, true, limits), cfg, out);
    }
    if (*shorten_cmd) {
      Stopwatch clock;
      Loop loop(gs, GroupElement::identity(), GenWord::parse(gs, word));
      auto found = loop_shorten_search(loop, k, strict, basepoint, limits);
      CheckReport r;
      r.command = "shorten-loop";
      r.genset = gs.name();
      r.params = {{"word", word}, {"k", k}, {"strict", strict}, {"basepoint", basepoint}};
      r.verdict = found ? verdict::holds : verdict::fails;
      json w = {{"kind", found ? "shorter_loop" : "unshortenable_loop"},
                {"base", loop.base().key()},
                {"word", word},
                {"k", k},
                {"strict", strict},
                {"basepoint", basepoint}};
      if (found) {
        w["shorter_base"] = found->base.key();
        w["shorter_word"] = found->word.str(gs);
      }
      r.witnesses.push_back(std::move(w));
      r.stats.pairs_examined = 1;
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    if (*dot_cmd) {
      if (radius < 0) throw InputError("--radius must be non-negative");
      Stopwatch clock;
      auto ball = obtain_ball(gs, radius, cfg, limits);
      std::vector<GroupElement> marks;
      if (!highlight.empty())
        for (const auto& w : split_commas(highlight)) marks.push_back(elem(w));
      std::string dot = export_dot(*ball, radius, marks);
      std::size_t edges = 0;
      for (BallIndex::Index i = 0; i < ball->size(); ++i)
        for (int e = 0; e < GenSet::kEdges; e += 2)
          if (ball->neighbor(i, e) != BallIndex::npos) ++edges;
      CheckReport r = computed("export-dot", gs, {{"radius", radius}, {"highlight", highlight}});
      json census = {{"kind", "dot_census"}, {"r", radius}, {"nodes", ball->size()}, {"edges", edges}};
      if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write " + out_file);
        f << dot;
      } else if (cfg.json_output) {
        census["dot"] = dot;
      } else {
        out << dot;
        return kSuccess;
      }
      r.witnesses.push_back(std::move(census));
      r.stats.ball_size = static_cast<std::int64_t>(ball->size());
      r.stats.runtime_ms = clock.elapsed_ms();
      return emit(r, cfg, out);
    }
    throw InputError("no subcommand");
  } catch (const ResourceError& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kResourceOverflow;
  } catch (const ValidationError& e) {
    err << "error: invalid cache: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace cayley::cli
