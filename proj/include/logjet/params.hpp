#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logjet {

/// Arbitrary-precision signed integer.  All combinatorial quantities are
/// computed exactly and only reduced mod p at the end.
using ExactInt = boost::multiprecision::cpp_int;

/// Exact rational.  The modified binomials live in Z_(p) (denominator prime
/// to p), not in Z; their residues mod p are still well defined.
using ExactRational = boost::multiprecision::cpp_rational;

/// Residue mod p, kept in [0, p).
using Coeff = std::uint32_t;

/// A self-check failed: something the mathematics guarantees (exactness of a
/// division, uniqueness of coordinates) did not hold.  Distinct from
/// std::invalid_argument, which reports a caller contract violation.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(std::uint64_t v);

/// Ambient configuration: prime p, level m, coordinate count n.
struct Params {
  std::uint32_t p;
  std::uint32_t m;
  std::uint32_t n;
  std::uint64_t pm;  // p^m

  Params(std::uint32_t p_, std::uint32_t m_, std::uint32_t n_);
};

inline Coeff add_mod(Coeff a, Coeff b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return Coeff(s >= p ? s - p : s);
}

inline Coeff sub_mod(Coeff a, Coeff b, std::uint32_t p) {
  return a >= b ? a - b : Coeff(a + p - b);
}

inline Coeff neg_mod(Coeff a, std::uint32_t p) { return a == 0 ? 0 : Coeff(p - a); }

inline Coeff mul_mod(Coeff a, Coeff b, std::uint32_t p) {
  return Coeff((std::uint64_t(a) * b) % p);
}

Coeff inv_mod(Coeff a, std::uint32_t p);

/// Residue in [0, p) of an exact integer (handles negatives).
Coeff reduce_mod(const ExactInt& v, std::uint32_t p);

/// Residue of an exact rational whose denominator is prime to p.  A p in the
/// denominator raises ConsistencyError (it would falsify the divided-power
/// integrality lemma).
Coeff reduce_mod(const ExactRational& v, std::uint32_t p);

}  // namespace logjet
