#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cayley/ball.hpp"

namespace cayley {

// Ball cache, TSV:
//   CAYLEYBALL<TAB>v1<TAB><genset><TAB><radius>
//   <key><TAB><distance>      one per element, sorted by (distance, key)
std::string ball_to_tsv(const BallIndex& ball);
// Parses and validates. Throws ValidationError with a diagnostic.
BallIndex ball_from_tsv(const std::string& text);

void save_ball_cache(const BallIndex& ball, const std::filesystem::path& path);
BallIndex load_ball_cache(const std::filesystem::path& path);

// File name used for (genset, radius) inside a cache directory.
std::string cache_file_name(const GenSet& gs, int radius);

namespace cli {

enum ExitCode : int { kSuccess = 0, kVerdictFails = 1, kUsageError = 2, kResourceOverflow = 3 };

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace cayley
