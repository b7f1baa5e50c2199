#include "doctest.h"
#include "logjet/runner.hpp"

#include "json.hpp"

using namespace logjet;

TEST_CASE("parse_flags defaults") {
  RunConfig cfg = parse_flags({});
  CHECK(cfg.p == 2);
  CHECK(cfg.m == 1);
  CHECK(cfg.n == 1);
  CHECK(cfg.max_eta_weight == 4);  // 2 * p^m
  CHECK(cfg.max_degree == 2);
  CHECK(cfg.suites == all_suites());
  CHECK(cfg.jobs == 1);
  CHECK(cfg.output_path.empty());
}

TEST_CASE("parse_flags options") {
  RunConfig cfg = parse_flags({"--p", "3", "--m", "1", "--suite", "homotopy"});
  CHECK(cfg.p == 3);
  CHECK(cfg.max_eta_weight == 6);
  REQUIRE(cfg.suites.size() == 1);
  CHECK(cfg.suites[0] == Suite::Homotopy);

  RunConfig two = parse_flags({"--suite", "gamma", "--suite", "binomials", "--jobs", "4",
                               "--max-weight", "7", "--out", "r.json"});
  CHECK((two.suites == std::vector<Suite>{Suite::Gamma, Suite::Binomials}));
  CHECK(two.jobs == 4);
  CHECK(two.max_eta_weight == 7);
  CHECK(two.output_path == "r.json");
}

TEST_CASE("parse_flags usage errors") {
  CHECK_THROWS_AS((parse_flags({"--p", "4"})), UsageError);
  CHECK_THROWS_AS((parse_flags({"--p", "x"})), UsageError);
  CHECK_THROWS_AS((parse_flags({"--suite", "nonsense"})), UsageError);
  CHECK_THROWS_AS((parse_flags({"--max-degree", "0"})), UsageError);
  CHECK_THROWS_AS((parse_flags({"--max-weight", "0"})), UsageError);
  CHECK_THROWS_AS((parse_flags({"--bogus"})), UsageError);
}

TEST_CASE("empty suite list gives an empty passing report") {
  RunConfig cfg;
  cfg.suites.clear();
  VerificationReport rep = run(cfg);
  CHECK(rep.overall_pass);
  CHECK(rep.suites.empty());
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.suites = {Suite::Gamma, Suite::DdZero, Suite::Homotopy};
  cfg.jobs = 2;
  VerificationReport a = run(cfg);
  VerificationReport b = run(cfg);
  CHECK(render_report_body(a) == render_report_body(b));
  CHECK(a.overall_pass);
}

TEST_CASE("worker count does not change results") {
  RunConfig cfg;
  cfg.suites = {Suite::Homotopy};
  cfg.jobs = 1;
  VerificationReport a = run(cfg);
  cfg.jobs = 3;
  VerificationReport b = run(cfg);
  auto ja = nlohmann::json::parse(render_report_body(a));
  auto jb = nlohmann::json::parse(render_report_body(b));
  CHECK(ja["suites"] == jb["suites"]);
  CHECK(ja["overall_pass"] == jb["overall_pass"]);
}

TEST_CASE("report body shape") {
  RunConfig cfg;
  cfg.suites = {Suite::Gamma};
  VerificationReport rep = run(cfg);
  auto j = nlohmann::json::parse(render_report_body(rep));
  CHECK(j["tool"] == "logjet-verify");
  CHECK(j["version"] == std::string(kToolVersion));
  CHECK(j["config"]["p"] == 2);
  CHECK(j["suites"][0]["name"] == "gamma");
  CHECK(j["suites"][0]["cases"].get<std::uint64_t>() > 0);
  CHECK(j["suites"][0]["failures"].empty());
  CHECK(j["overall_pass"] == true);
  CHECK_FALSE(j.contains("timings"));
  auto full = nlohmann::json::parse(render_report(rep));
  CHECK(full.contains("timings"));
  CHECK(full["timings"].contains("total_seconds"));
}

TEST_CASE("suite names round-trip") {
  for (Suite s : all_suites()) CHECK(suite_from_name(suite_name(s)) == s);
  CHECK_FALSE(suite_from_name("unknown").has_value());
}
