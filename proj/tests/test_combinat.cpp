#include "doctest.h"
#include "logjet/combinat.hpp"
#include "oracle.hpp"

using namespace logjet;

TEST_CASE("digit_sum") {
  CHECK(digit_sum(0, 2) == 0);
  CHECK(digit_sum(5, 2) == 2);
  CHECK(digit_sum(8, 3) == 4);
}

TEST_CASE("Params validation") {
  CHECK_THROWS_AS(Params(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(2, 1, 0), std::invalid_argument);
  Params p(2, 2, 3);
  CHECK(p.pm == 4);
}

TEST_CASE("binom") {
  CHECK(binom(8, 2) == 28);
  CHECK(binom(17, 0) == 1);
  CHECK(binom(6, 3) == 20);
  CHECK_THROWS_AS(binom(3, 4), std::invalid_argument);
  for (std::uint64_t k = 0; k <= 40; ++k)
    for (std::uint64_t kp = 0; kp <= k; ++kp) CHECK(binom(k, kp) == oracle::binom(k, kp));
}

TEST_CASE("mbinom") {
  Params p31(3, 1, 1), p21(2, 1, 1);
  CHECK(mbinom(p31, 8, 2) == 1);
  CHECK(mbinom(p21, 4, 2) == 2);
  CHECK(mbinom(p21, 19, 0) == 1);
  CHECK_THROWS_AS(mbinom(p21, 1, 2), std::invalid_argument);
}

TEST_CASE("qbinom") {
  Params p31(3, 1, 1), p21(2, 1, 1);
  CHECK(qbinom(p31, 8, 2) == 28);
  CHECK(qbinom_mod(p31, 8, 2) == 1);  // consistent with the 1-mod-p lemma
  CHECK(qbinom(p21, 2, 1) == 2);
  CHECK(qbinom(p21, 3, 2) == 3);
  // {6 over 3} = 20/6 = 10/3 at (2,1): in Z_(2) but not in Z
  CHECK(qbinom_rational(p21, 6, 3) == ExactRational(10, 3));
  CHECK_THROWS_AS(qbinom(p21, 6, 3), ConsistencyError);
  CHECK(qbinom_mod(p21, 6, 3) == 0);
}

TEST_CASE("qbinom exactness across the window") {
  for (auto [pv, mv] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    Params params(pv, mv, 1);
    for (std::uint64_t k = 0; k <= 300; ++k)
      for (std::uint64_t kp = 0; kp <= k; ++kp) {
        ExactRational q = qbinom_rational(params, k, kp);
        REQUIRE(q == oracle::qbinom(pv, mv, k, kp));
        ExactInt den(boost::multiprecision::denominator(q));
        REQUIRE(den % pv != 0);  // Z_(p)-integrality
        REQUIRE(ExactRational(binom(k, kp)) == ExactRational(mbinom(params, k, kp)) * q);
      }
  }
}

TEST_CASE("binomial congruence lemmas") {
  for (auto [pv, mv] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {3, 1}}) {
    Params params(pv, mv, 1);
    const std::uint64_t pm = params.pm;
    for (std::uint64_t q = 1; q <= std::uint64_t(pv) * pv; ++q)
      for (std::uint64_t k = 0; k < pm; ++k)
        for (std::uint64_t t = k + 1; t <= pm; ++t) {
          Coeff want = t == pm ? 1 % pv : 0;
          REQUIRE(qbinom_mod(params, pm * q + k, t) == want);
        }
    for (std::uint64_t q = 0; q <= std::uint64_t(pv) * pv; ++q)
      for (std::uint64_t t = 0; t <= pm; ++t)
        REQUIRE(qbinom_mod(params, pm * q + t, t) == 1 % pv);
  }
}

TEST_CASE("multi binomials") {
  Params p21(2, 1, 2);
  MultiIndex i{3, 2}, j{2, 2};
  CHECK((multi_binom(i, MultiIndex{0, 0}) == 1));
  CHECK(multi_qbinom(p21, i, j) == 3);
  CHECK(multi_binom(i, i) == 1);
  CHECK(multi_mbinom(p21, i, i) == 1);
  CHECK(multi_qbinom(p21, i, i) == 1);
  CHECK_THROWS_AS((multi_binom(i, MultiIndex{4, 0})), std::invalid_argument);
  CHECK_THROWS_AS((multi_binom(i, MultiIndex{1})), std::invalid_argument);
}

TEST_CASE("gamma worked values") {
  Params p21(2, 1, 1);
  CHECK((gamma(p21, MultiIndex{2}, MultiIndex{1}, MultiIndex{0}) == 1));
  CHECK((gamma(p21, MultiIndex{0}, MultiIndex{1}, MultiIndex{2}) == 1));
  CHECK((gamma(p21, MultiIndex{1}, MultiIndex{1}, MultiIndex{1}) == 0));
  CHECK_THROWS_AS((gamma(p21, MultiIndex{1}, MultiIndex{1, 0}, MultiIndex{1})), std::invalid_argument);
}

TEST_CASE("gamma agrees with the factorial oracle") {
  for (auto [pv, mv] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
    Params params(pv, mv, 1);
    for (std::uint64_t total = 0; total <= 3 * params.pm + 4; ++total)
      for (std::uint64_t a = 0; a <= total; ++a)
        for (std::uint64_t b = 0; a + b <= total; ++b)
          REQUIRE(gamma_scalar(params, a, b, total - a - b) ==
                  oracle::gamma(pv, mv, a, b, total - a - b));
  }
}

TEST_CASE("gamma is multiplicative over components") {
  Params params(2, 1, 3);
  MultiIndex a{1, 0, 2}, b{2, 1, 0}, c{0, 1, 1};
  Coeff expect = 1;
  for (std::size_t k = 0; k < 3; ++k)
    expect = mul_mod(expect, oracle::gamma(2, 1, a[k], b[k], c[k]), 2);
  CHECK(gamma(params, a, b, c) == expect);
}

TEST_CASE("gamma trichotomy") {
  for (auto [pv, mv] : {std::pair<unsigned, unsigned>{2, 1}, {2, 2}, {3, 1}}) {
    Params params(pv, mv, 1);
    const std::uint64_t pm = params.pm;
    for (std::uint64_t q = 0; q <= std::uint64_t(pv) * pv; ++q)
      for (std::uint64_t k = 0; k < pm; ++k)
        for (std::uint64_t a = 0; a <= pm; ++a)
          for (std::uint64_t c = 0; a + c <= pm; ++c) {
            if (a + c > pm * q + k) continue;
            std::uint64_t b = pm * q + k - a - c;
            Coeff got = gamma_scalar(params, a, b, c);
            Coeff want;
            if (q >= 1 && a == pm && c == 0)
              want = Coeff(q % pv);
            else if (q >= 1 && a == 0 && c == pm)
              want = 1 % pv;
            else if (b >= pm * q)
              want = oracle::gamma(pv, mv, a, b - pm * q, c);
            else
              want = 0;
            REQUIRE(got == want);
          }
  }
}

TEST_CASE("sigma") {
  Params p2(2, 1, 1), p3(3, 1, 1);
  CHECK(sigma(p2, 1) == 2);
  CHECK(sigma(p2, 2) == 4);
  CHECK(sigma(p3, 0) == 3);
  for (auto* params : {&p2, &p3})
    for (std::uint64_t q = 0; q <= 200; ++q) {
      std::uint64_t s = sigma(*params, q);
      CHECK(s > q);
      CHECK(s % params->p == 0);
      CHECK(s - q <= params->p);
    }
}

TEST_CASE("valuation cross-check") {
  for (auto [pv, mv] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}}) {
    for (std::uint64_t k = 0; k <= 300; ++k)
      for (std::uint64_t kp = 0; kp <= k; ++kp) {
        std::uint64_t digits = digit_sum(kp, pv) + digit_sum(k - kp, pv) - digit_sum(k, pv);
        REQUIRE(valuation(pv, binom(k, kp)) * (pv - 1) == digits);
      }
  }
  CHECK_THROWS_AS(valuation(2, ExactInt(0)), std::invalid_argument);
}
