#include "cayley/report.hpp"

#include <set>

#include "cayley/checks.hpp"
#include "cayley/error.hpp"

namespace cayley {

using nlohmann::json;

namespace {

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> read_optional_int(const json& obj, const char* field) {
  if (!obj.contains(field)) throw InputError(std::string("stats is missing field '") + field + "'");
  const json& v = obj.at(field);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) throw InputError(std::string("stats field '") + field + "' must be an integer or null");
  return v.get<std::int64_t>();
}

const json& require(const json& doc, const char* field, json::value_t type) {
  if (!doc.contains(field)) throw InputError(std::string("report is missing field '") + field + "'");
  const json& v = doc.at(field);
  bool ok = v.type() == type || (type == json::value_t::number_integer && v.is_number_integer());
  if (!ok) throw InputError(std::string("report field '") + field + "' has the wrong type");
  return v;
}

}  // namespace

json to_json(const CheckReport& r) {
  return json{{"command", r.command},
              {"genset", r.genset},
              {"params", r.params},
              {"verdict", r.verdict},
              {"witnesses", r.witnesses},
              {"stats",
               {{"ball_size", optional_int(r.stats.ball_size)},
                {"pairs_examined", optional_int(r.stats.pairs_examined)},
                {"max_inside_distance", optional_int(r.stats.max_inside_distance)},
                {"runtime_ms", r.stats.runtime_ms}}},
              {"version", r.version}};
}

CheckReport report_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("report must be a JSON object");
  static const std::set<std::string> fields = {"command", "genset", "params", "verdict",
                                               "witnesses", "stats", "version"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!fields.count(it.key())) throw InputError("unexpected report field '" + it.key() + "'");
  CheckReport r;
  r.command = require(doc, "command", json::value_t::string).get<std::string>();
  r.genset = require(doc, "genset", json::value_t::string).get<std::string>();
  r.params = require(doc, "params", json::value_t::object);
  r.verdict = require(doc, "verdict", json::value_t::string).get<std::string>();
  for (const auto& w : require(doc, "witnesses", json::value_t::array)) {
    if (!w.is_object() || !w.contains("kind") || !w.at("kind").is_string())
      throw InputError("every witness must be an object with a string 'kind'");
    r.witnesses.push_back(w);
  }
  const json& stats = require(doc, "stats", json::value_t::object);
  for (auto it = stats.begin(); it != stats.end(); ++it)
    if (it.key() != "ball_size" && it.key() != "pairs_examined" && it.key() != "max_inside_distance" &&
        it.key() != "runtime_ms")
      throw InputError("unexpected stats field '" + it.key() + "'");
  r.stats.ball_size = read_optional_int(stats, "ball_size");
  r.stats.pairs_examined = read_optional_int(stats, "pairs_examined");
  r.stats.max_inside_distance = read_optional_int(stats, "max_inside_distance");
  if (!stats.contains("runtime_ms") || !stats.at("runtime_ms").is_number_integer())
    throw InputError("stats field 'runtime_ms' must be an integer");
  r.stats.runtime_ms = stats.at("runtime_ms").get<std::int64_t>();
  r.version = require(doc, "version", json::value_t::number_integer).get<int>();
  if (r.version != CheckReport::kVersion) throw InputError("unsupported report version " + std::to_string(r.version));
  return r;
}

bool is_success_verdict(const std::string& v) {
  return v != verdict::fails && v != verdict::inconclusive && v != verdict::verification_failed;
}

namespace {

GroupElement elem(const json& w, const char* field) { return GroupElement::from_key(w.at(field).get<std::string>()); }

int integer(const json& w, const char* field) { return w.at(field).get<int>(); }

bool flag(const json& w, const char* field) { return w.at(field).get<bool>(); }

std::optional<int> optional_integer(const json& w, const char* field) {
  if (w.at(field).is_null()) return std::nullopt;
  return w.at(field).get<int>();
}

bool reverify_sphere_pair(const GenSet& gs, const json& w, const ResourceLimits& limits) {
  const int r = integer(w, "r");
  BallIndex ball = build_ball(gs, r + 1, limits);
  const GroupElement u = elem(w, "u"), v = elem(w, "v");
  if (ball.distance_of(u) != r || ball.distance_of(v) != r) return false;
  Metric metric(std::move(ball));
  auto d = metric.distance(u, v);
  if (!d || *d != integer(w, "distance") || *d > 2 || *d < 1) return false;
  auto inside = inside_distance(metric.ball(), u, v, r);
  if (inside != optional_integer(w, "inside_distance")) return false;
  const bool exceeds = !inside || *inside > integer(w, "f_value");
  return exceeds == flag(w, "exceeds_f");
}

bool reverify_mac_pair(const json& w, const ResourceLimits& limits) {
  const int n = integer(w, "n");
  auto [u, v] = mac_witness_pair(n);
  if (!(u == elem(w, "u")) || !(v == elem(w, "v"))) return false;
  Metric metric(GenSet::hnn(), 2 * n, limits);
  return metric.ball().distance_of(u) == integer(w, "u_length") &&
         metric.ball().distance_of(v) == integer(w, "v_length") &&
         metric.distance(u, v) == integer(w, "distance") &&
         inside_distance(metric.ball(), u, v) == optional_integer(w, "inside_distance");
}

bool reverify_loop(const GenSet& gs, const json& w, const ResourceLimits& limits, bool expect_shorter) {
  const int k = integer(w, "k");
  const bool strict = flag(w, "strict"), basepoint = flag(w, "basepoint");
  const bool shorter_record = w.contains("shorter_word");
  Loop loop(gs, elem(w, "base"), GenWord::parse(gs, w.at("word").get<std::string>()));
  Metric metric(gs, strict ? k - 1 : k, limits);
  auto found = loop_shorten_search(metric, loop, k, strict, basepoint, limits);
  if (!expect_shorter) return !found;
  if (!found || !shorter_record) return false;
  ShorterLoop claimed{elem(w, "shorter_base"), GenWord::parse(gs, w.at("shorter_word").get<std::string>())};
  return is_fellow_travelling_shorter_loop(metric, loop, claimed, k, strict, basepoint);
}

bool reverify_fftp(const GenSet& gs, const json& w, const ResourceLimits& limits, const std::string& kind) {
  const int k = integer(w, "k");
  GenWord word = GenWord::parse(gs, w.at("word").get<std::string>());
  Metric metric(gs, std::max(k, static_cast<int>((word.size() + 1) / 2)), limits);
  if (geodesic_check(metric, word)) return false;
  if (kind == "fftp_counterexample") return !fftp_falsify(metric, word, k, limits);
  if (kind == "fftp_shortening")
    return is_fellow_travelling_shortening(metric, word, GenWord::parse(gs, w.at("shorter").get<std::string>()), k);
  // minimal_k: works at k, not at k - 1.
  if (!fftp_falsify(metric, word, k, limits)) return false;
  return k == 0 || !fftp_falsify(metric, word, k - 1, limits);
}

}  // namespace

bool reverify_witness(const std::string& genset, const json& w, const ResourceLimits& limits) {
  const GenSet gs = GenSet::parse(genset);
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "sphere_pair") return reverify_sphere_pair(gs, w, limits);
  if (kind == "mac_witness_pair") return reverify_mac_pair(w, limits);
  if (kind == "unshortenable_loop") return reverify_loop(gs, w, limits, false);
  if (kind == "shorter_loop") return reverify_loop(gs, w, limits, true);
  if (kind == "fftp_counterexample" || kind == "fftp_shortening" || kind == "minimal_k")
    return reverify_fftp(gs, w, limits, kind);
  if (kind == "distance") {
    const int cap = integer(w, "distance");
    return distance(gs, elem(w, "u"), elem(w, "v"), cap, limits) == cap &&
           (cap == 0 || !distance(gs, elem(w, "u"), elem(w, "v"), cap - 1, limits));
  }
  if (kind == "inside_distance") {
    BallIndex ball = build_ball(gs, integer(w, "radius"), limits);
    return inside_distance(ball, elem(w, "u"), elem(w, "v")) == optional_integer(w, "inside_distance");
  }
  if (kind == "sphere_sizes") {
    BallIndex ball = build_ball(gs, integer(w, "radius"), limits);
    return w.at("sizes").get<std::vector<std::size_t>>() == ball.sphere_sizes();
  }
  if (kind == "profile_point") {
    const int r = integer(w, "r");
    auto points = convexity_profile(gs, r, limits);
    return points.back().max_inside_distance == integer(w, "max_inside_distance") &&
           points.back().pairs == w.at("pairs").get<std::size_t>();
  }
  if (kind == "dot_census") {
    const int r = integer(w, "r");
    BallIndex ball = build_ball(gs, r, limits);
    std::size_t edges = 0;
    for (BallIndex::Index i = 0; i < ball.size(); ++i)
      for (int e = 0; e < GenSet::kEdges; e += 2)
        if (ball.neighbor(i, e) != BallIndex::npos) ++edges;
    return w.at("nodes").get<std::size_t>() == ball.size() && w.at("edges").get<std::size_t>() == edges;
  }
  throw InputError("unknown witness kind '" + kind + "'");
}

bool reverify_report(const CheckReport& report, const ResourceLimits& limits) {
  for (const auto& w : report.witnesses)
    if (!reverify_witness(report.genset, w, limits)) return false;
  return true;
}

}  // namespace cayley
