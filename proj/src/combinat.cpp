#include "logjet/combinat.hpp"

#include <limits>
#include <unordered_map>

namespace logjet {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Params::Params(std::uint32_t p_, std::uint32_t m_, std::uint32_t n_)
    : p(p_), m(m_), n(n_), pm(1) {
  if (!is_prime(p)) throw std::invalid_argument("Params: p must be prime");
  if (n < 1) throw std::invalid_argument("Params: n must be >= 1");
  for (std::uint32_t i = 0; i < m; ++i) {
    if (pm > (std::uint64_t(1) << 40) / p)
      throw std::invalid_argument("Params: p^m too large");
    pm *= p;
  }
}

Coeff inv_mod(Coeff a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("inv_mod: not invertible");
  // extended Euclid
  std::int64_t r0 = p, r1 = a % p, x0 = 0, x1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return Coeff((x0 % p + p) % p);
}

Coeff reduce_mod(const ExactInt& v, std::uint32_t p) {
  ExactInt r = v % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r.convert_to<std::uint64_t>());
}

Coeff reduce_mod(const ExactRational& v, std::uint32_t p) {
  Coeff den = reduce_mod(ExactInt(boost::multiprecision::denominator(v)), p);
  if (den == 0)
    throw ConsistencyError("reduce_mod: denominator divisible by p, value not in Z_(p)");
  Coeff num = reduce_mod(ExactInt(boost::multiprecision::numerator(v)), p);
  return mul_mod(num, inv_mod(den, p), p);
}

std::uint64_t digit_sum(std::uint64_t t, std::uint32_t p) {
  std::uint64_t s = 0;
  while (t > 0) {
    s += t % p;
    t /= p;
  }
  return s;
}

ExactInt factorial(std::uint64_t k) {
  ExactInt r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

ExactInt binom(std::uint64_t k, std::uint64_t kp) {
  if (kp > k) throw std::invalid_argument("binom: k' > k");
  if (kp > k - kp) kp = k - kp;
  ExactInt r = 1;
  for (std::uint64_t i = 1; i <= kp; ++i) {
    r *= (k - kp + i);
    r /= i;  // exact at every step
  }
  return r;
}

ExactInt mbinom(const Params& params, std::uint64_t k, std::uint64_t kp) {
  if (kp > k) throw std::invalid_argument("mbinom: k' > k");
  std::uint64_t q = k / params.pm, q1 = kp / params.pm, q2 = (k - kp) / params.pm;
  ExactInt num = factorial(q);
  ExactInt den = factorial(q1) * factorial(q2);
  ExactInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem != 0) throw ConsistencyError("mbinom: q!/(q'!q''!) not an integer");
  return quo;
}

ExactRational qbinom_rational(const Params& params, std::uint64_t k, std::uint64_t kp) {
  if (kp > k) throw std::invalid_argument("qbinom: k' > k");
  return ExactRational(binom(k, kp), mbinom(params, k, kp));
}

ExactInt qbinom(const Params& params, std::uint64_t k, std::uint64_t kp) {
  ExactRational q = qbinom_rational(params, k, kp);
  if (boost::multiprecision::denominator(q) != 1)
    throw ConsistencyError("qbinom(" + std::to_string(k) + "," + std::to_string(kp) +
                           "): exact value " + q.str() + " is not a rational integer");
  return ExactInt(boost::multiprecision::numerator(q));
}

Coeff qbinom_mod(const Params& params, std::uint64_t k, std::uint64_t kp) {
  return reduce_mod(qbinom_rational(params, k, kp), params.p);
}

namespace {

void check_leq(const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != j.size()) throw std::invalid_argument("multi binom: length mismatch");
  if (!j.leq(i)) throw std::invalid_argument("multi binom: J must be <= I componentwise");
}

}  // namespace

ExactInt multi_binom(const MultiIndex& i, const MultiIndex& j) {
  check_leq(i, j);
  ExactInt r = 1;
  for (std::size_t k = 0; k < i.size(); ++k) r *= binom(i[k], j[k]);
  return r;
}

ExactInt multi_mbinom(const Params& params, const MultiIndex& i, const MultiIndex& j) {
  check_leq(i, j);
  ExactInt r = 1;
  for (std::size_t k = 0; k < i.size(); ++k) r *= mbinom(params, i[k], j[k]);
  return r;
}

ExactInt multi_qbinom(const Params& params, const MultiIndex& i, const MultiIndex& j) {
  check_leq(i, j);
  ExactRational r = 1;
  for (std::size_t k = 0; k < i.size(); ++k) r *= qbinom_rational(params, i[k], j[k]);
  if (boost::multiprecision::denominator(r) != 1)
    throw ConsistencyError("multi_qbinom: exact value " + r.str() +
                           " is not a rational integer");
  return ExactInt(boost::multiprecision::numerator(r));
}

namespace {

Coeff gamma_scalar_exact(const Params& params, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c) {
  // The product lies in Z_(p) even when the qbinom factors are not integers.
  ExactRational g = qbinom_rational(params, a + b + c, a) *
                    qbinom_rational(params, b + c, b) *
                    ExactRational(mbinom(params, a + b, a)) *
                    ExactRational(mbinom(params, a + c, a));
  return reduce_mod(g, params.p);
}

}  // namespace

Coeff gamma_scalar(const Params& params, std::uint64_t a, std::uint64_t b,
                   std::uint64_t c) {
  if (a < (1u << 16) && b < (1u << 16) && c < (1u << 16) && params.p < (1u << 10) &&
      params.m < (1u << 6)) {
    thread_local std::unordered_map<std::uint64_t, Coeff> memo;
    std::uint64_t key = (std::uint64_t(params.p) << 54) | (std::uint64_t(params.m) << 48) |
                        (a << 32) | (b << 16) | c;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Coeff g = gamma_scalar_exact(params, a, b, c);
    memo.emplace(key, g);
    return g;
  }
  return gamma_scalar_exact(params, a, b, c);
}

Coeff gamma(const Params& params, const MultiIndex& a, const MultiIndex& b,
            const MultiIndex& c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("gamma: A, B, C must have the same length");
  Coeff g = 1 % params.p;
  for (std::size_t k = 0; k < a.size() && g != 0; ++k)
    g = mul_mod(g, gamma_scalar(params, a[k], b[k], c[k]), params.p);
  return g;
}

std::uint64_t sigma(const Params& params, std::uint64_t q) {
  return std::uint64_t(params.p) * (q / params.p + 1);
}

std::uint64_t valuation(std::uint32_t p, ExactInt v) {
  if (v == 0) throw std::invalid_argument("valuation: zero has no finite valuation");
  if (v < 0) v = -v;
  std::uint64_t w = 0;
  while (v % p == 0) {
    v /= p;
    ++w;
  }
  return w;
}

}  // namespace logjet
