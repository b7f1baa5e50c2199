#include "logjet/runner.hpp"

#include <fstream>
#include <iostream>

namespace {

// 0: all suites pass.  1: a checked identity is falsified.  2: internal
// consistency failure (inexact division, non-unique coordinates).  64: usage.
enum ExitCode { kPass = 0, kFalsified = 1, kInconsistent = 2, kUsage = 64 };

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  logjet::RunConfig config;
  try {
    config = logjet::parse_flags(args);
  } catch (const logjet::UsageError& e) {
    std::cerr << logjet::kToolName << ": " << e.what() << "\n"
              << "usage: logjet-verify [--p P] [--m M] [--n N] [--max-weight W]\n"
              << "                     [--max-degree R] [--suite NAME]... [--jobs J] [--out PATH]\n"
              << "suites: binomials gamma ddzero relations homotopy lemmas\n";
    return kUsage;
  }

  try {
    logjet::VerificationReport report = logjet::run(config);
    std::string text = logjet::render_report(report);
    if (config.output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.output_path, std::ios::binary);
      if (!out) {
        std::cerr << logjet::kToolName << ": cannot write " << config.output_path << "\n";
        return kUsage;
      }
      out << text;
    }
    for (const auto& sr : report.suites)
      for (const auto& f : sr.failures)
        std::cerr << "FAIL [" << logjet::suite_name(sr.suite) << "] " << f.input << ": "
                  << f.detail << "\n";
    return report.overall_pass ? kPass : kFalsified;
  } catch (const logjet::ConsistencyError& e) {
    std::cerr << logjet::kToolName << ": internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << logjet::kToolName << ": " << e.what() << "\n";
    return kUsage;
  }
}
