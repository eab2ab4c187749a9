#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayley/checks.hpp"
#include "cayley/cli.hpp"
#include "cayley/error.hpp"

using namespace cayley;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cayley");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("cayley-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << text;
}

}  // namespace

TEST_CASE("exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> matrix = {
      {{"check-mac", "--genset", "s1", "--radius", "2"}, 0},
      {{"check-mac", "--genset", "s2", "--radius", "2"}, 1},
      {{"check-mac", "--genset", "s2", "--radius", "3"}, 0},
      {{"check-mprimeac", "--genset", "s2", "--radius", "2"}, 1},
      {{"verify-thm2", "--n", "1"}, 0},
      {{"verify-thm2", "--n", "2"}, 0},
      {{"verify-thm3", "--k", "1"}, 0},
      {{"verify-thm3", "--k", "2", "--basepoint"}, 0},
      {{"distance", "--genset", "s2", "--word1", "aaBB", "--word2", "taaB"}, 0},
      {{"inside-distance", "--genset", "s2", "--radius", "2", "--word1", "aB", "--word2", "ta"}, 0},
      {{"ball", "--genset", "s1", "--radius", "2"}, 0},
      {{"profile", "--genset", "s1", "--rmax", "2"}, 0},
      {{"fftp-scan", "--genset", "s1", "--maxlen", "3", "--k", "2"}, 0},
      {{"fftp-scan", "--genset", "s2", "--maxlen", "3", "--k", "1"}, 1},
      {{"lsp-scan", "--genset", "s1", "--k", "2"}, 0},
      {{"lsp-scan", "--genset", "s2", "--k", "2"}, 1},
      {{"shorten-loop", "--genset", "s1", "--word", "acACacAC", "--k", "2"}, 0},
      {{"shorten-loop", "--genset", "s1", "--word", "acAC", "--k", "1", "--strict"}, 1},
      {{"export-dot", "--genset", "s2", "--radius", "1"}, 0},
      // usage and input errors
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"check-mac", "--genset", "s1"}, 2},
      {{"check-mac", "--genset", "s3", "--radius", "2"}, 2},
      {{"check-mac", "--genset", "custom:a,b,c,A", "--radius", "2"}, 2},
      {{"check-mac", "--genset", "s1", "--radius", "0"}, 2},
      {{"distance", "--genset", "s2", "--word1", "ax", "--word2", "a"}, 2},
      {{"distance", "--genset", "s1", "--word1", "t", "--word2", "a"}, 2},
      {{"inside-distance", "--genset", "s2", "--radius", "1", "--word1", "aB", "--word2", "ta"}, 2},
      {{"shorten-loop", "--genset", "s1", "--word", "ab", "--k", "2"}, 2},
      {{"shorten-loop", "--genset", "s1", "--word", "aA", "--k", "0"}, 2},
      {{"fftp-scan", "--genset", "s1", "--maxlen", "9", "--k", "2"}, 2},
      {{"verify-thm2", "--n", "0"}, 2},
      {{"check-mac", "--genset", "s1", "--radius", "2", "--max-elements", "0"}, 2},
      {{"check-mac", "--genset", "s1", "--radius", "2", "--timeout", "-1"}, 2},
      // resource overflow
      {{"ball", "--genset", "s1", "--radius", "6", "--max-elements", "1000"}, 3},
      {{"verify-thm2", "--n", "3", "--max-elements", "5000"}, 3},
  };
  for (const auto& c : matrix) {
    Result r = run_cli(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    INFO(joined);
    CHECK(r.code == c.code);
    if (c.code >= 2) CHECK_FALSE(r.err.empty());
  }
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("distinct diagnostics") {
  auto bad_word = run_cli({"distance", "--genset", "s2", "--word1", "ax", "--word2", "a"});
  auto bad_genset = run_cli({"ball", "--genset", "custom:a,b,c,aA", "--radius", "1"});
  auto overflow = run_cli({"ball", "--genset", "s1", "--radius", "6", "--max-elements", "1000"});
  CHECK(bad_word.err != bad_genset.err);
  CHECK(bad_word.err.find("'x'") != std::string::npos);
  CHECK(bad_genset.err.find("identity") != std::string::npos);
  CHECK(overflow.err.find("resource limit") != std::string::npos);
}

TEST_CASE("human output") {
  auto d = run_cli({"distance", "--genset", "s2", "--word1", "aaBB", "--word2", "taaB"});
  CHECK(d.out.rfind("distance: 2\n", 0) == 0);
  auto mac = run_cli({"check-mac", "--genset", "s1", "--radius", "2"});
  CHECK(mac.out.find("verdict: HOLDS") != std::string::npos);
  CHECK(mac.out.find("max_inside_distance: 2") != std::string::npos);
  auto inside = run_cli({"inside-distance", "--genset", "s2", "--radius", "2", "--word1", "aB", "--word2", "ta"});
  CHECK(inside.out.rfind("inside_distance: 4\n", 0) == 0);
  auto dot = run_cli({"export-dot", "--genset", "s2", "--radius", "1", "--highlight", "a,t"});
  CHECK(dot.out.rfind("graph cayley {", 0) == 0);
  CHECK(dot.out.find("\"1|-3\" [dist=1, style=bold") != std::string::npos);
}

TEST_CASE("json output matches the report schema") {
  const std::vector<std::vector<std::string>> commands = {
      {"ball", "--genset", "s2", "--radius", "2"},
      {"distance", "--genset", "s2", "--word1", "aaBB", "--word2", "taaB"},
      {"inside-distance", "--genset", "s2", "--radius", "2", "--word1", "aB", "--word2", "ta"},
      {"check-mac", "--genset", "s2", "--radius", "2"},
      {"check-mprimeac", "--genset", "s1", "--radius", "2"},
      {"profile", "--genset", "s2", "--rmax", "2"},
      {"verify-thm2", "--n", "2"},
      {"verify-thm3", "--k", "2"},
      {"fftp-scan", "--genset", "s2", "--maxlen", "3", "--k", "1"},
      {"lsp-scan", "--genset", "s1", "--k", "2", "--basepoint"},
      {"shorten-loop", "--genset", "s1", "--word", "acACacAC", "--k", "2"},
      {"export-dot", "--genset", "s1", "--radius", "1"},
  };
  for (auto args : commands) {
    INFO(args[0]);
    Result human = run_cli(args);
    args.push_back("--json");
    Result r = run_cli(args);
    CHECK(r.code == human.code);
    json doc = json::parse(r.out);
    CheckReport report = report_from_json(doc);
    CHECK(report.command == args[0]);
    CHECK(to_json(report) == doc);
    if (args[0] != "export-dot") CHECK(human.out.find("verdict: " + report.verdict) != std::string::npos);
    CHECK(reverify_report(report));
  }

  auto thm2 = json::parse(run_cli({"verify-thm2", "--n", "2", "--json"}).out);
  CHECK(thm2["verdict"] == "MAC_FAILS_AT_RADIUS_4");
  CHECK(thm2["stats"]["max_inside_distance"] == 8);
  CHECK(thm2["witnesses"][0]["inside_distance"] == 8);

  auto dot = json::parse(run_cli({"export-dot", "--genset", "s1", "--radius", "1", "--json"}).out);
  CHECK(dot["witnesses"][0]["nodes"] == 9);
  CHECK(dot["witnesses"][0]["edges"] == 8);
  CHECK(dot["witnesses"][0]["dot"].get<std::string>().rfind("graph cayley {", 0) == 0);
}

TEST_CASE("ball cache round trip") {
  for (const char* name : {"s1", "s2", "custom:ab,b,c,dc"}) {
    const GenSet gs = GenSet::parse(name);
    const BallIndex ball = build_ball(gs, 3);
    const std::string text = ball_to_tsv(ball);
    const BallIndex loaded = ball_from_tsv(text);
    CHECK(loaded == ball);
    CHECK(loaded.genset().same_marking(gs));
    CHECK(ball_to_tsv(loaded) == text);

    const fs::path dir = scratch_dir("roundtrip");
    const fs::path file = dir / cache_file_name(gs, 3);
    save_ball_cache(ball, file);
    CHECK(slurp(file) == text);
    CHECK(load_ball_cache(file) == ball);
    save_ball_cache(load_ball_cache(file), dir / "again.tsv");
    CHECK(slurp(dir / "again.tsv") == slurp(file));
    fs::remove_all(dir);
  }
  CHECK(cache_file_name(GenSet::standard(), 5) == "ball-s1-r5.tsv");
  CHECK(cache_file_name(GenSet::parse("custom:a,b,c,dd"), 2) != cache_file_name(GenSet::parse("custom:a,b,c,ddd"), 2));
  CHECK(ball_to_tsv(build_ball(GenSet::standard(), 1)).rfind("CAYLEYBALL\tv1\ts1\t1\n|\t0\n", 0) == 0);
}

TEST_CASE("ball cache validation") {
  const std::string good = ball_to_tsv(build_ball(GenSet::hnn(), 2));
  CHECK_NOTHROW(ball_from_tsv(good));

  auto rejects = [](const std::string& text) { CHECK_THROWS_AS(ball_from_tsv(text), ValidationError); };
  // element at distance 2 with no neighbour at distance 1
  rejects("CAYLEYBALL\tv1\ts1\t2\n|\t0\n1\t1\n-1\t1\n2\t1\n-2\t1\n|3\t1\n|-3\t1\n|4\t1\n|-4\t1\n1,1|\t2\n3|\t2\n");
  {
    std::string text = good;
    // drop one distance-1 element: its distance-2 children lose a parent, interior loses a neighbour
    auto pos = text.find("1|-3\t1\n");
    REQUIRE(pos != std::string::npos);
    text.erase(pos, 7);
    rejects(text);
  }
  // header radius mismatch with the records
  {
    std::string text = good;
    text.replace(text.find("\t2\n"), 3, "\t3\n");
    rejects(text);
  }
  {
    std::string text = good;
    text.replace(text.find("\t2\n"), 3, "\t1\n");
    rejects(text);
  }
  rejects("");
  rejects("CAYLEYBALL\tv2\ts1\t0\n|\t0\n");
  rejects("CAYLEYBALL\tv1\ts9\t0\n|\t0\n");
  rejects("CAYLEYBALL\tv1\ts1\t0\n|\n");
  rejects("CAYLEYBALL\tv1\ts1\t0\n1,-1|\t0\n");
  rejects("CAYLEYBALL\tv1\ts1\t1\n|\t0\n-1\t1\n1\t1\n2\t1\n-2\t1\n|3\t1\n|-3\t1\n|4\t1\n|-4\t1\n");  // unsorted
  rejects("CAYLEYBALL\tv1\ts1\t0\n|\t0\n|\t0\n");  // duplicate
  rejects("CAYLEYBALL\tv1\ts1\tx\n|\t0\n");
  // wrong distance: "1" is at distance 1, not 2
  rejects("CAYLEYBALL\tv1\ts1\t1\n|\t0\n-1\t1\n-2\t1\n2\t1\n|-3\t1\n|-4\t1\n|3\t1\n|4\t1\n1\t2\n");
}

TEST_CASE("cache directory is reused and re-validated") {
  const fs::path dir = scratch_dir("cache");
  const std::vector<std::string> args = {"check-mac", "--genset", "s2", "--radius", "2", "--cache", dir.string()};
  Result first = run_cli(args);
  CHECK(first.code == 1);
  const fs::path file = dir / "ball-s2-r3.tsv";
  REQUIRE(fs::exists(file));
  const std::string bytes = slurp(file);
  Result second = run_cli(args);
  CHECK(second.code == 1);
  CHECK(slurp(file) == bytes);

  // a corrupted cache is rejected, not trusted
  std::string corrupt = bytes;
  corrupt.replace(corrupt.find("\t1\n"), 3, "\t2\n");
  write(file, corrupt);
  Result third = run_cli(args);
  CHECK(third.code == 2);
  CHECK(third.err.find("invalid cache") != std::string::npos);

  // a cache file holding another ball under this name is rejected
  write(file, ball_to_tsv(build_ball(GenSet::standard(), 3)));
  CHECK(run_cli(args).code == 2);

  // ball --out writes the same bytes as the cache
  const fs::path out = dir / "out.tsv";
  CHECK(run_cli({"ball", "--genset", "s1", "--radius", "3", "--out", out.string()}).code == 0);
  CHECK(slurp(out) == ball_to_tsv(build_ball(GenSet::standard(), 3)));
  fs::remove_all(dir);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(CAYLEY_BINARY) + " distance --genset s2 --word1 aaBB --word2 taaB > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string fails = std::string(CAYLEY_BINARY) + " check-mac --genset s2 --radius 2 > /dev/null";
  CHECK(WEXITSTATUS(std::system(fails.c_str())) == 1);
}
