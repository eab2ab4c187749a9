#include <charconv>
#include <fstream>
#include <sstream>

#include "cayley/cli.hpp"
#include "cayley/error.hpp"

namespace cayley {

namespace {

constexpr std::string_view kMagic = "CAYLEYBALL";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) return out;
    pos = tab + 1;
  }
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw ValidationError("malformed " + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string ball_to_tsv(const BallIndex& ball) {
  std::string out;
  out += std::string(kMagic) + '\t' + std::string(kVersion) + '\t' + ball.genset().name() + '\t' +
         std::to_string(ball.radius()) + '\n';
  for (BallIndex::Index i = 0; i < ball.size(); ++i)
    out += ball.element(i).key() + '\t' + std::to_string(ball.distance(i)) + '\n';
  return out;
}

BallIndex ball_from_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty ball cache");
  auto header = split_tabs(line);
  if (header.size() != 4 || header[0] != kMagic || header[1] != kVersion)
    throw ValidationError("bad ball cache header '" + line + "'");
  GenSet gs = [&] {
    try {
      return GenSet::parse(header[2]);
    } catch (const InputError& e) {
      throw ValidationError(std::string("bad generating set in header: ") + e.what());
    }
  }();
  const int radius = parse_int(header[3], "radius");
  std::vector<GroupElement> elements;
  std::vector<std::uint8_t> dist;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_tabs(line);
    if (fields.size() != 2) throw ValidationError("line " + std::to_string(line_no) + ": expected key<TAB>distance");
    try {
      elements.push_back(GroupElement::from_key(fields[0]));
    } catch (const InputError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const int d = parse_int(fields[1], "distance");
    if (d > radius)
      throw ValidationError("line " + std::to_string(line_no) + ": distance " + std::to_string(d) +
                            " exceeds header radius " + std::to_string(radius));
    dist.push_back(static_cast<std::uint8_t>(d));
  }
  try {
    BallIndex ball(std::move(gs), radius, std::move(elements), std::move(dist));
    ball.validate();
    return ball;
  } catch (const InputError& e) {
    throw ValidationError(e.what());
  }
}

void save_ball_cache(const BallIndex& ball, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << ball_to_tsv(ball);
  if (!out) throw InputError("failed writing " + path.string());
}

BallIndex load_ball_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ball_from_tsv(buf.str());
}

std::string cache_file_name(const GenSet& gs, int radius) {
  std::string tag = gs.name();
  if (tag != "s1" && tag != "s2") {
    // Custom names mix cases; hash them so the file name is portable.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : tag) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << "custom-" << std::hex << h;
    tag = hex.str();
  }
  return "ball-" + tag + "-r" + std::to_string(radius) + ".tsv";
}

}  // namespace cayley
