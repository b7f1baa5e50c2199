// Acceptance suite: one line per criterion, exact (tolerance-zero) checks.
// Exit status 0 iff every criterion passes.

#include "logjet/runner.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace logjet;

namespace {

struct Criterion {
  int id;
  std::string label;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
  double limit = 0.0;  // 0: no stated limit
  bool pass() const { return failures == 0 && (limit == 0.0 || seconds < limit); }
};

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::pair<unsigned, unsigned>> kLemmaConfigs{{2, 1}, {2, 2}, {3, 1}, {5, 1}};

Criterion criterion1() {
  Criterion c{1, "binomial congruence lemmas, qbinom by exact factorial brute force"};
  c.limit = 5.0;
  auto t0 = Clock::now();
  for (auto [p, m] : kLemmaConfigs) {
    Params params(p, m, 1);
    const std::uint64_t pm = params.pm;
    for (std::uint64_t q = 1; q <= std::uint64_t(p) * p; ++q)
      for (std::uint64_t k = 0; k < pm; ++k)
        for (std::uint64_t t = k + 1; t <= pm; ++t) {
          ++c.cases;
          Coeff want = (t == pm) ? 1 % p : 0;
          Coeff lib = qbinom_mod(params, pm * q + k, t);
          Coeff ora = oracle::reduce(oracle::qbinom(p, m, pm * q + k, t), p);
          if (lib != want || ora != want) ++c.failures;
        }
    for (std::uint64_t q = 0; q <= std::uint64_t(p) * p; ++q)
      for (std::uint64_t t = 0; t <= pm; ++t) {
        ++c.cases;
        Coeff lib = qbinom_mod(params, pm * q + t, t);
        Coeff ora = oracle::reduce(oracle::qbinom(p, m, pm * q + t, t), p);
        if (lib != 1 % p || ora != 1 % p) ++c.failures;
      }
  }
  c.seconds = elapsed(t0);
  return c;
}

Criterion criterion2() {
  Criterion c{2, "gamma trichotomy, definition vs case predicate"};
  c.limit = 10.0;
  auto t0 = Clock::now();
  for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {3, 1}}) {
    Params params(p, m, 1);
    const std::uint64_t pm = params.pm;
    for (std::uint64_t q = 0; q <= std::uint64_t(p) * p; ++q)
      for (std::uint64_t k = 0; k < pm; ++k)
        for (std::uint64_t a = 0; a <= pm; ++a)
          for (std::uint64_t cc = 0; a + cc <= pm; ++cc) {
            if (a + cc > pm * q + k) continue;
            std::uint64_t b = pm * q + k - a - cc;
            ++c.cases;
            Coeff got = gamma(params, MultiIndex{std::uint32_t(a)},
                              MultiIndex{std::uint32_t(b)}, MultiIndex{std::uint32_t(cc)});
            Coeff want;
            if (q >= 1 && a == pm && cc == 0)
              want = Coeff(q % p);
            else if (q >= 1 && a == 0 && cc == pm)
              want = 1 % p;
            else if (b >= pm * q)
              want = oracle::gamma(p, m, a, b - pm * q, cc);
            else
              want = 0;
            if (got != want) ++c.failures;
          }
  }
  c.seconds = elapsed(t0);
  return c;
}

Criterion criterion3() {
  Criterion c{3, "qbinom divided-power integrality (denominator prime to p), k <= 200"};
  auto t0 = Clock::now();
  for (auto [p, m] : kLemmaConfigs) {
    Params params(p, m, 1);
    for (std::uint64_t k = 0; k <= 200; ++k)
      for (std::uint64_t kp = 0; kp <= k; ++kp) {
        ++c.cases;
        ExactRational q = qbinom_rational(params, k, kp);
        ExactInt den(boost::multiprecision::denominator(q));
        bool ok = den % p != 0;
        ok = ok && ExactRational(binom(k, kp)) == ExactRational(mbinom(params, k, kp)) * q;
        if (den == 1)
          ok = ok && qbinom(params, k, kp) == ExactInt(boost::multiprecision::numerator(q));
        if (!ok) ++c.failures;
      }
  }
  c.seconds = elapsed(t0);
  return c;
}

Criterion run_suite_criterion(int id, std::string label, Suite suite, std::uint32_t max_degree,
                              double limit) {
  Criterion c{id, std::move(label)};
  c.limit = limit;
  auto t0 = Clock::now();
  for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}})
    for (unsigned n : {1u, 2u}) {
      RunConfig cfg;
      cfg.p = p;
      cfg.m = m;
      cfg.n = n;
      cfg.max_eta_weight = 2 * Params(p, m, n).pm;
      cfg.max_degree = max_degree;
      cfg.suites = {suite};
      cfg.jobs = 2;
      VerificationReport rep = run(cfg);
      c.cases += rep.suites[0].cases;
      c.failures += rep.suites[0].failures.size();
    }
  c.seconds = elapsed(t0);
  return c;
}

Criterion criterion6() {
  Criterion c = run_suite_criterion(6, "homotopy identity on windowed symbols, r in {1,2}",
                                    Suite::Homotopy, 2, 600.0);
  // hand-verified anchor: (h d + d h)(delta(2;[1])) = delta(2;[1]) at (2,1), n=1
  Params p2(2, 1, 1);
  QuotientContext ctx(p2);
  DeltaSymbol anchor{MultiIndex{2}, {MultiIndex{1}}};
  CheckResult res = homotopy_check(ctx, anchor);
  ++c.cases;
  if (!res.pass || !(res.computed == Chain::single(p2, anchor))) ++c.failures;
  return c;
}

Criterion criterion7() {
  Criterion c{7, "named degree-0/degree-1/arbitrary-n lemma fixtures"};
  auto t0 = Clock::now();
  for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}})
    for (unsigned n : {1u, 2u}) {
      RunConfig cfg;
      cfg.p = p;
      cfg.m = m;
      cfg.n = n;
      cfg.max_eta_weight = 2 * Params(p, m, n).pm;  // degree-0 window reaches 3p^m
      cfg.suites = {Suite::Lemmas};
      cfg.jobs = 2;
      VerificationReport rep = run(cfg);
      c.cases += rep.suites[0].cases;
      c.failures += rep.suites[0].failures.size();
    }
  c.seconds = elapsed(t0);
  return c;
}

Criterion criterion8() {
  Criterion c{8, "projector algebra and permute-conjugated contraction"};
  auto t0 = Clock::now();
  for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
    Params params(p, m, 2);
    QuotientContext ctx(params);
    auto slots = slot_set(params);
    std::vector<DeltaSymbol> pool;
    for (const auto& i : indices_up_to_weight(2, 2 * params.pm))
      for (const auto& j : slots) pool.push_back(DeltaSymbol{i, {j}});
    for (const auto& i : indices_up_to_weight(2, params.pm))
      for (const auto& j1 : slots)
        for (const auto& j2 : slots) pool.push_back(DeltaSymbol{i, {j1, j2}});
    for (std::size_t t = 0; t < 200; ++t) {
      ++c.cases;
      const std::size_t deg = 1 + (t % 2);
      Chain v(deg);
      for (std::size_t u = 0; u < 3; ++u) {
        const DeltaSymbol& s = pool[(3 * t + u) % pool.size()];
        if (s.degree() == deg) v.add_canonical(params, s, Coeff((t + u) % (params.p - 1)) + 1);
      }
      bool ok = true;
      for (std::size_t a = 1; a <= 2; ++a) {
        Chain pa = pi(params, a, v);
        ok = ok && pi(params, a, pa) == pa;
        for (std::size_t b = a + 1; b <= 2; ++b)
          ok = ok && pi(params, b, pa) == pi(params, a, pi(params, b, v));
      }
      if (!ok) ++c.failures;
    }
    // h_1 = permute o h o permute must satisfy the axis-1 identity on n=2 windows
    for (const auto& i : indices_up_to_weight(2, params.pm))
      for (const auto& j : slots) {
        ++c.cases;
        Chain moved = permute(params, {2, 1}, Chain::single(params, DeltaSymbol{i, {j}}));
        if (!homotopy_check(ctx, moved.terms().begin()->first).pass) ++c.failures;
      }
  }
  c.seconds = elapsed(t0);
  return c;
}

Criterion criterion9() {
  Criterion c{9, "byte-identical report bodies for identical configs"};
  auto t0 = Clock::now();
  RunConfig cfg;  // defaults: (2,1,1), weight 4, all suites
  cfg.jobs = 2;
  std::string a = render_report_body(run(cfg));
  std::string b = render_report_body(run(cfg));
  c.cases = 1;
  if (a != b || a.empty()) ++c.failures;
  c.seconds = elapsed(t0);
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  try {
    results.push_back(criterion1());
    results.push_back(criterion2());
    results.push_back(criterion3());
    results.push_back(run_suite_criterion(
        4, "d o d = 0 in the quotient on windowed symbols", Suite::DdZero, 2, 120.0));
    results.push_back(run_suite_criterion(
        5, "contraction kills all relations of degree <= 3", Suite::Relations, 3, 300.0));
    results.push_back(criterion6());
    results.push_back(criterion7());
    results.push_back(criterion8());
    results.push_back(criterion9());
  } catch (const ConsistencyError& e) {
    std::fprintf(stderr, "internal consistency failure: %s\n", e.what());
    return 2;
  }

  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass();
    if (c.limit > 0.0)
      std::printf("%s  criterion %d: %s  [%llu cases, %llu failures, %.2fs < %.0fs]\n",
                  c.pass() ? "PASS" : "FAIL", c.id, c.label.c_str(),
                  static_cast<unsigned long long>(c.cases),
                  static_cast<unsigned long long>(c.failures), c.seconds, c.limit);
    else
      std::printf("%s  criterion %d: %s  [%llu cases, %llu failures, %.2fs]\n",
                  c.pass() ? "PASS" : "FAIL", c.id, c.label.c_str(),
                  static_cast<unsigned long long>(c.cases),
                  static_cast<unsigned long long>(c.failures), c.seconds);
  }
  return all ? 0 : 1;
}
