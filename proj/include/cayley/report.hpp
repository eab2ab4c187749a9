#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/limits.hpp"

namespace cayley {

namespace verdict {
inline constexpr const char* holds = "HOLDS";
inline constexpr const char* fails = "FAILS";
inline constexpr const char* inconclusive = "INCONCLUSIVE";
// A pure computation finished.
inline constexpr const char* computed = "COMPUTED";
// A witness family instance could not be confirmed.
inline constexpr const char* verification_failed = "VERIFICATION_FAILED";
}  // namespace verdict

// Witnesses per report, kept in key order.
inline constexpr std::size_t kWitnessCap = 16;

struct ReportStats {
  std::optional<std::int64_t> ball_size;
  std::optional<std::int64_t> pairs_examined;
  std::optional<std::int64_t> max_inside_distance;
  std::int64_t runtime_ms = 0;
  friend bool operator==(const ReportStats&, const ReportStats&) = default;
};

struct CheckReport {
  static constexpr int kVersion = 1;

  std::string command;
  std::string genset;
  nlohmann::json params = nlohmann::json::object();
  std::string verdict;
  std::vector<nlohmann::json> witnesses;
  ReportStats stats;
  int version = kVersion;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

nlohmann::json to_json(const CheckReport& report);
// Schema-checked parse. Throws InputError naming the offending field.
CheckReport report_from_json(const nlohmann::json& doc);

// Verdicts that map to exit status 0: HOLDS, COMPUTED and confirmed witness
// instances such as MAC_FAILS_AT_RADIUS_4.
bool is_success_verdict(const std::string& v);

// Recomputes one witness record from scratch through the underlying
// operation. Throws InputError for unknown witness kinds.
bool reverify_witness(const std::string& genset, const nlohmann::json& witness, const ResourceLimits& limits = {});
bool reverify_report(const CheckReport& report, const ResourceLimits& limits = {});

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace cayley
