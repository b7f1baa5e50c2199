#include "logjet/runner.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <functional>
#include <thread>

namespace logjet {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::Binomials, Suite::Gamma,     Suite::DdZero,
                                    Suite::Relations, Suite::Homotopy, Suite::Lemmas};
  return s;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Binomials: return "binomials";
    case Suite::Gamma: return "gamma";
    case Suite::DdZero: return "ddzero";
    case Suite::Relations: return "relations";
    case Suite::Homotopy: return "homotopy";
    case Suite::Lemmas: return "lemmas";
  }
  return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

namespace {

struct Case {
  std::string key;
  std::function<std::optional<Failure>(QuotientContext&)> check;
};

Failure fail(std::string input, std::string residual, std::string detail) {
  return Failure{std::move(input), std::move(residual), std::move(detail)};
}

// ---- binomials ----------------------------------------------------------

void binomials_cases(const Params& params, std::vector<Case>& out) {
  const std::uint64_t pm = params.pm;
  const std::uint32_t p = params.p;
  const std::uint64_t qmax = std::uint64_t(p) * p;
  for (std::uint64_t q = 1; q <= qmax; ++q)
    for (std::uint64_t k = 0; k < pm; ++k)
      for (std::uint64_t t = k + 1; t <= pm; ++t) {
        std::string key = "qbinom(" + std::to_string(pm * q + k) + "," + std::to_string(t) +
                          ") vs lemma(0 mod p)";
        out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                         Coeff got = qbinom_mod(params, pm * q + k, t);
                         Coeff want = (t == pm) ? 1 % p : 0;
                         if (got == want) return std::nullopt;
                         return fail(key, std::to_string(got),
                                     "expected " + std::to_string(want));
                       }});
      }
  for (std::uint64_t q = 0; q <= qmax; ++q)
    for (std::uint64_t t = 0; t <= pm; ++t) {
      std::string key = "qbinom(" + std::to_string(pm * q + t) + "," + std::to_string(t) +
                        ") vs lemma(1 mod p)";
      out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                       Coeff got = qbinom_mod(params, pm * q + t, t);
                       if (got == 1 % p) return std::nullopt;
                       return fail(key, std::to_string(got), "expected 1");
                     }});
    }
  for (std::uint64_t k = 0; k <= 200; ++k) {
    std::string key = "qbinom Z_(p)-integrality, k=" + std::to_string(k);
    out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                     for (std::uint64_t kp = 0; kp <= k; ++kp) {
                       ExactRational q = qbinom_rational(params, k, kp);
                       ExactInt den(boost::multiprecision::denominator(q));
                       if (den % p == 0)
                         return fail(key, q.str(),
                                     "k'=" + std::to_string(kp) +
                                         ": denominator divisible by p");
                       if (ExactRational(binom(k, kp)) !=
                           ExactRational(mbinom(params, k, kp)) * q)
                         return fail(key, q.str(),
                                     "k'=" + std::to_string(kp) + ": factorization broken");
                       if (den == 1 && qbinom(params, k, kp) !=
                                           ExactInt(boost::multiprecision::numerator(q)))
                         return fail(key, q.str(),
                                     "k'=" + std::to_string(kp) + ": integer path disagrees");
                     }
                     return std::nullopt;
                   }});
  }
  for (std::uint64_t k = 0; k <= 300; ++k) {
    std::string key = "valuation(binom) digit identity, k=" + std::to_string(k);
    out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                     for (std::uint64_t kp = 0; kp <= k; ++kp) {
                       std::uint64_t v = valuation(p, binom(k, kp));
                       std::uint64_t digits =
                           digit_sum(kp, p) + digit_sum(k - kp, p) - digit_sum(k, p);
                       if (v * (p - 1) != digits)
                         return fail(key, std::to_string(v),
                                     "k'=" + std::to_string(kp) + ", digit sum " +
                                         std::to_string(digits));
                     }
                     return std::nullopt;
                   }});
  }
}

// ---- gamma trichotomy ---------------------------------------------------

void gamma_cases(const Params& params, std::vector<Case>& out) {
  const std::uint64_t pm = params.pm;
  const std::uint32_t p = params.p;
  const std::uint64_t qmax = std::uint64_t(p) * p;
  auto scalar_gamma = [&params](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return gamma(params, MultiIndex{std::uint32_t(a)}, MultiIndex{std::uint32_t(b)},
                 MultiIndex{std::uint32_t(c)});
  };
  for (std::uint64_t q = 0; q <= qmax; ++q)
    for (std::uint64_t k = 0; k < pm; ++k) {
      std::string key = "gamma trichotomy, a+b+c=" + std::to_string(pm * q + k) +
                        " (q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")";
      out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                       const std::uint64_t total = pm * q + k;
                       for (std::uint64_t a = 0; a <= pm; ++a)
                         for (std::uint64_t c = 0; a + c <= pm; ++c) {
                           if (a + c > total) continue;
                           std::uint64_t b = total - a - c;
                           Coeff got = scalar_gamma(a, b, c);
                           Coeff want;
                           if (q >= 1 && a == pm && c == 0)
                             want = Coeff(q % p);
                           else if (q >= 1 && a == 0 && c == pm)
                             want = 1 % p;
                           else if (b >= pm * q)
                             want = scalar_gamma(a, b - pm * q, c);
                           else
                             want = 0;
                           if (got != want)
                             return fail(key, std::to_string(got),
                                         "(a,b,c)=(" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) +
                                             "), expected " + std::to_string(want));
                         }
                       return std::nullopt;
                     }});
    }
}

// ---- d o d = 0 ----------------------------------------------------------

void ddzero_cases(const Params& params, std::uint64_t weight, std::vector<Case>& out) {
  auto push = [&](DeltaSymbol s) {
    std::string key = "d(d(" + render(s) + ")) = 0 in quotient";
    out.push_back({key, [=, &params](QuotientContext& ctx) -> std::optional<Failure> {
                     Chain dd = differential(params, differential(params, Chain::single(params, s)));
                     if (ctx.quotient_zero(dd)) return std::nullopt;
                     return fail(key, render(dd), "composite differential not in relation span");
                   }});
  };
  for (const auto& i : indices_up_to_weight(params.n, weight + params.pm))
    push(DeltaSymbol{i, {}});
  for (const auto& i : indices_up_to_weight(params.n, weight))
    for (const auto& j : slot_set(params)) push(DeltaSymbol{i, {j}});
}

// ---- relations ----------------------------------------------------------

std::vector<std::vector<MultiIndex>> slot_tuples(const std::vector<MultiIndex>& items,
                                                 std::size_t len) {
  std::vector<std::vector<MultiIndex>> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<MultiIndex>> next;
    for (const auto& t : out)
      for (const auto& item : items) {
        auto t2 = t;
        t2.push_back(item);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

std::string spec_key(const RelationSpec& spec) {
  std::string key = "relation I=" + render(spec.eta) + " k=" + std::to_string(spec.position) +
                    " J=" + render(spec.inner) + " before=";
  for (const auto& j : spec.before) key += render(j);
  key += " after=";
  for (const auto& j : spec.after) key += render(j);
  return key;
}

void relations_cases(const Params& params, std::uint64_t weight, std::uint32_t max_degree,
                     std::vector<Case>& out) {
  const auto slots = slot_set(params);
  const auto inners = relation_inner_set(params);
  for (const auto& eta : indices_up_to_weight(params.n, weight))
    for (std::uint32_t r = 2; r <= max_degree; ++r)
      for (std::size_t k = 1; k + 1 <= r; ++k)
        for (const auto& before : slot_tuples(slots, k - 1))
          for (const auto& after : slot_tuples(slots, r - k - 1))
            for (const auto& inner : inners) {
              RelationSpec spec{eta, k, inner, before, after};
              std::string base = spec_key(spec);
              out.push_back(
                  {base + " #self", [=, &params](QuotientContext& ctx) -> std::optional<Failure> {
                     Chain rel = relation_chain(params, spec);
                     if (ctx.quotient_zero(rel)) return std::nullopt;
                     return fail(base + " #self", render(rel), "relation not in its own span");
                   }});
              out.push_back(
                  {base + " #h", [=, &params](QuotientContext& ctx) -> std::optional<Failure> {
                     Chain rel = relation_chain(params, spec);
                     if (rel.is_zero()) return std::nullopt;
                     Chain img = h(ctx, rel);
                     if (ctx.quotient_zero(img)) return std::nullopt;
                     return fail(base + " #h", render(img), "h does not kill the relation");
                   }});
            }
}

// ---- homotopy -----------------------------------------------------------

void homotopy_cases(const Params& params, std::uint64_t weight, std::uint32_t max_degree,
                    std::vector<Case>& out) {
  const auto slots = slot_set(params);
  for (const auto& eta : indices_up_to_weight(params.n, weight))
    for (std::uint32_t r = 1; r <= max_degree; ++r)
      for (const auto& tuple : slot_tuples(slots, r)) {
        DeltaSymbol s{eta, tuple};
        std::string key = "homotopy " + render(s);
        out.push_back({key, [=](QuotientContext& ctx) -> std::optional<Failure> {
                         CheckResult res = homotopy_check(ctx, s);
                         if (res.pass) return std::nullopt;
                         return fail(key, render(res.residual),
                                     "computed " + render(res.computed) + ", expected " +
                                         render(res.expected));
                       }});
      }
}

// ---- lemmas -------------------------------------------------------------

void lemmas_cases(const Params& params, std::uint64_t weight, std::vector<Case>& out) {
  // degree-0 identity, exact
  for (const auto& i : indices_up_to_weight(params.n, weight + params.pm)) {
    DeltaSymbol s{i, {}};
    std::string key = "h1(d0(" + render(s) + ")) exact";
    out.push_back({key, [=, &params](QuotientContext& ctx) -> std::optional<Failure> {
                     Chain got = h(ctx, diff0(params, s.eta));
                     Chain want =
                         s.eta.last() > 0 ? Chain::single(params, s) : Chain(0);
                     if (got == want) return std::nullopt;
                     return fail(key, render(sub(params, got, want)),
                                 "computed " + render(got) + ", expected " + render(want));
                   }});
  }
  // n=1 degree-1 identity
  if (params.n == 1)
    for (std::uint64_t i = 0; i <= weight + params.pm; ++i)
      for (std::uint64_t k = 1; k <= params.pm; ++k) {
        DeltaSymbol s{MultiIndex{std::uint32_t(i)}, {MultiIndex{std::uint32_t(k)}}};
        std::string key = "degree-1 identity " + render(s);
        out.push_back({key, [=](QuotientContext& ctx) -> std::optional<Failure> {
                         CheckResult res = homotopy_check(ctx, s);
                         if (res.pass) return std::nullopt;
                         return fail(key, render(res.residual), "identity fails");
                       }});
      }
  // last-coordinate special case for arbitrary n
  for (std::uint64_t i = 0; i <= weight; ++i)
    for (const auto& j : slot_set(params)) {
      MultiIndex eta = MultiIndex::zeros(params.n);
      eta[params.n - 1] = std::uint32_t(i);
      DeltaSymbol s{eta, {j}};
      std::string key = "last-coordinate special " + render(s);
      out.push_back({key, [=](QuotientContext& ctx) -> std::optional<Failure> {
                       CheckResult res = homotopy_check(ctx, s);
                       if (res.pass) return std::nullopt;
                       return fail(key, render(res.residual), "identity fails");
                     }});
    }
  // projector algebra on 200 deterministic windowed chains
  {
    std::vector<DeltaSymbol> pool;
    for (const auto& i : indices_up_to_weight(params.n, weight)) {
      for (const auto& j : slot_set(params)) pool.push_back(DeltaSymbol{i, {j}});
    }
    for (const auto& i : indices_up_to_weight(params.n, params.pm))
      for (const auto& j1 : slot_set(params))
        for (const auto& j2 : slot_set(params)) pool.push_back(DeltaSymbol{i, {j1, j2}});
    for (std::size_t t = 0; t < 200; ++t) {
      std::string key = "projector algebra, chain " + std::to_string(t);
      out.push_back({key, [=, &params](QuotientContext&) -> std::optional<Failure> {
                       const std::size_t deg = 1 + (t % 2);
                       Chain v(deg);
                       for (std::size_t u = 0; u < 3; ++u) {
                         const DeltaSymbol& s = pool[(3 * t + u) % pool.size()];
                         if (s.degree() != deg) continue;
                         v.add_canonical(params, s, Coeff((t + u) % (params.p - 1)) + 1);
                       }
                       for (std::size_t a = 1; a <= params.n; ++a) {
                         Chain pa = pi(params, a, v);
                         if (!(pi(params, a, pa) == pa))
                           return fail(key, render(v), "pi_" + std::to_string(a) +
                                                           " not idempotent");
                         for (std::size_t b = a + 1; b <= params.n; ++b) {
                           if (!(pi(params, b, pa) == pi(params, a, pi(params, b, v))))
                             return fail(key, render(v), "pi_" + std::to_string(a) + " and pi_" +
                                                             std::to_string(b) +
                                                             " do not commute");
                         }
                       }
                       return std::nullopt;
                     }});
    }
  }
  // conjugated contraction for the other coordinates
  if (params.n >= 2) {
    for (std::size_t axis = 1; axis < params.n; ++axis)
      for (const auto& i : indices_up_to_weight(params.n, params.pm))
        for (std::uint32_t r = 1; r <= 2; ++r)
          for (const auto& tuple : slot_tuples(slot_set(params), r)) {
            DeltaSymbol s{i, tuple};
            std::string key =
                "conjugated contraction, axis " + std::to_string(axis) + ", " + render(s);
            out.push_back({key, [=, &params](QuotientContext& ctx) -> std::optional<Failure> {
                             std::vector<std::size_t> perm(params.n);
                             for (std::size_t u = 0; u < params.n; ++u) perm[u] = u + 1;
                             std::swap(perm[axis - 1], perm[params.n - 1]);
                             Chain moved = permute(params, perm, Chain::single(params, s));
                             const DeltaSymbol& ms = moved.terms().begin()->first;
                             CheckResult res = homotopy_check(ctx, ms);
                             if (res.pass) return std::nullopt;
                             return fail(key, render(res.residual), "conjugated identity fails");
                           }});
          }
  }
}

// ---- orchestration ------------------------------------------------------

std::vector<Case> build_cases(const Params& params, const RunConfig& cfg, Suite suite) {
  std::vector<Case> cases;
  switch (suite) {
    case Suite::Binomials: binomials_cases(params, cases); break;
    case Suite::Gamma: gamma_cases(params, cases); break;
    case Suite::DdZero: ddzero_cases(params, cfg.max_eta_weight, cases); break;
    case Suite::Relations:
      relations_cases(params, cfg.max_eta_weight, cfg.max_degree, cases);
      break;
    case Suite::Homotopy: homotopy_cases(params, cfg.max_eta_weight, cfg.max_degree, cases); break;
    case Suite::Lemmas: lemmas_cases(params, cfg.max_eta_weight, cases); break;
  }
  return cases;
}

SuiteResult run_suite(const Params& params, const RunConfig& cfg, Suite suite) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Case> cases = build_cases(params, cfg, suite);
  SuiteResult res;
  res.suite = suite;
  res.cases = cases.size();

  const std::size_t jobs =
      std::max<std::size_t>(1, std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(cases.size(), 1)));
  std::vector<std::optional<Failure>> results(cases.size());
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](std::size_t w) {
    try {
      QuotientContext ctx(params);
      std::size_t lo = cases.size() * w / jobs;
      std::size_t hi = cases.size() * (w + 1) / jobs;
      for (std::size_t idx = lo; idx < hi; ++idx) results[idx] = cases[idx].check(ctx);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : results)
    if (r) res.failures.push_back(std::move(*r));
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

VerificationReport run(const RunConfig& config) {
  if (config.max_degree < 1) throw std::invalid_argument("run: max_degree must be >= 1");
  if (config.max_eta_weight < 1) throw std::invalid_argument("run: max_eta_weight must be >= 1");
  Params params(config.p, config.m, config.n);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config = config;
  for (Suite s : config.suites) {
    report.suites.push_back(run_suite(params, config, s));
    if (!report.suites.back().failures.empty()) report.overall_pass = false;
  }
  report.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

nlohmann::ordered_json report_body_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = report.version;
  nlohmann::ordered_json cfg;
  cfg["p"] = report.config.p;
  cfg["m"] = report.config.m;
  cfg["n"] = report.config.n;
  cfg["max_eta_weight"] = report.config.max_eta_weight;
  cfg["max_degree"] = report.config.max_degree;
  std::vector<std::string> names;
  for (Suite s : report.config.suites) names.emplace_back(suite_name(s));
  cfg["suites"] = names;
  cfg["jobs"] = report.config.jobs;
  j["config"] = cfg;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& sr : report.suites) {
    nlohmann::ordered_json s;
    s["name"] = std::string(suite_name(sr.suite));
    s["cases"] = sr.cases;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : sr.failures) {
      nlohmann::ordered_json jf;
      jf["input"] = f.input;
      jf["residual"] = f.residual;
      jf["detail"] = f.detail;
      fails.push_back(jf);
    }
    s["failures"] = fails;
    suites.push_back(s);
  }
  j["suites"] = suites;
  j["overall_pass"] = report.overall_pass;
  return j;
}

}  // namespace

std::string render_report_body(const VerificationReport& report) {
  return report_body_json(report).dump(2) + "\n";
}

std::string render_report(const VerificationReport& report) {
  nlohmann::ordered_json j = report_body_json(report);
  nlohmann::ordered_json t;
  t["total_seconds"] = report.total_seconds;
  nlohmann::ordered_json per;
  for (const auto& sr : report.suites) per[std::string(suite_name(sr.suite))] = sr.seconds;
  t["per_suite"] = per;
  j["timings"] = t;
  return j.dump(2) + "\n";
}

RunConfig parse_flags(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Exact verification of the level-m logarithmic jet complex over F_p"};
  std::uint32_t p = 2, m = 1, n = 1, max_degree = 2, jobs = 1;
  std::optional<std::uint64_t> max_weight;
  std::vector<std::string> suite_names;
  std::string out_path;
  app.add_option("--p", p, "prime p (default 2)");
  app.add_option("--m", m, "level m (default 1)");
  app.add_option("--n", n, "coordinate count (default 1)");
  app.add_option("--max-weight", max_weight, "bound on |I| (default 2*p^m)");
  app.add_option("--max-degree", max_degree, "largest checked degree (default 2)");
  app.add_option("--suite", suite_names, "suite to run, repeatable (default: all)");
  app.add_option("--jobs", jobs, "worker count (default 1)");
  app.add_option("--out", out_path, "report path (default: stdout)");

  std::vector<const char*> argv{kToolName.data()};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (!is_prime(p)) throw UsageError("--p must be a prime number");
  if (max_degree < 1) throw UsageError("--max-degree must be >= 1");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  cfg.p = p;
  cfg.m = m;
  cfg.n = n;
  cfg.max_degree = max_degree;
  cfg.jobs = jobs;
  cfg.output_path = out_path;
  Params params(p, m, n);  // validates n and p^m
  cfg.max_eta_weight = max_weight.value_or(2 * params.pm);
  if (cfg.max_eta_weight < 1) throw UsageError("--max-weight must be >= 1");
  if (!suite_names.empty()) {
    cfg.suites.clear();
    for (const auto& name : suite_names) {
      auto s = suite_from_name(name);
      if (!s) throw UsageError("unknown suite '" + name + "'");
      cfg.suites.push_back(*s);
    }
  }
  return cfg;
}

}  // namespace logjet
