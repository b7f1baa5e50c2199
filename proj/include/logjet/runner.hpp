#pragma once

#include "logjet/homotopy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logjet {

inline constexpr std::string_view kToolName = "logjet-verify";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Suite { Binomials, Gamma, DdZero, Relations, Homotopy, Lemmas };

const std::vector<Suite>& all_suites();
std::string_view suite_name(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);

/// Bad command line (malformed value, non-prime p, unknown suite).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t n = 1;
  std::uint64_t max_eta_weight = 4;  // defaults to 2*p^m when not given
  std::uint32_t max_degree = 2;
  std::vector<Suite> suites = all_suites();
  std::uint32_t jobs = 1;
  std::string output_path;  // empty: stdout
};

/// Flags: --p --m --n --max-weight --max-degree --suite (repeatable) --jobs
/// --out.  Throws UsageError on malformed input.
RunConfig parse_flags(const std::vector<std::string>& args);

struct Failure {
  std::string input;
  std::string residual;
  std::string detail;
};

struct SuiteResult {
  Suite suite;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  double seconds = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool overall_pass = true;
  std::string version{kToolVersion};
  double total_seconds = 0.0;
};

/// Executes the requested suites over the deterministic enumeration of inputs
/// within the configured bounds.  Propagates ConsistencyError.
VerificationReport run(const RunConfig& config);

/// Deterministic report body: identical config and version give a
/// byte-identical string.  Timings are excluded.
std::string render_report_body(const VerificationReport& report);

/// Full report: body plus a timings section.
std::string render_report(const VerificationReport& report);

}  // namespace logjet
