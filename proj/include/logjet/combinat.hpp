#pragma once

#include "logjet/multi_index.hpp"
#include "logjet/params.hpp"

#include <cstdint>

namespace logjet {

/// Sum of the base-p digits of t.
std::uint64_t digit_sum(std::uint64_t t, std::uint32_t p);

ExactInt factorial(std::uint64_t k);

/// k! / (k'! (k-k')!), exact.  Requires k' <= k.
ExactInt binom(std::uint64_t k, std::uint64_t kp);

/// q!/(q'! q''!) where q = floor(k/p^m), q' = floor(k'/p^m),
/// q'' = floor((k-k')/p^m).  Requires k' <= k.
ExactInt mbinom(const Params& params, std::uint64_t k, std::uint64_t kp);

/// binom(k,k') / mbinom(k,k') as an exact rational.  Always lies in Z_(p)
/// (denominator prime to p), but not in Z in general: e.g. p=2, m=1 gives
/// {6 over 3} = 20/6 = 10/3.
ExactRational qbinom_rational(const Params& params, std::uint64_t k, std::uint64_t kp);

/// Integer form of qbinom; raises ConsistencyError when the exact quotient
/// is not a rational integer.
ExactInt qbinom(const Params& params, std::uint64_t k, std::uint64_t kp);

/// Residue mod p of the exact rational qbinom.
Coeff qbinom_mod(const Params& params, std::uint64_t k, std::uint64_t kp);

/// Componentwise products of the scalar versions.  Require J <= I.
ExactInt multi_binom(const MultiIndex& i, const MultiIndex& j);
ExactInt multi_mbinom(const Params& params, const MultiIndex& i, const MultiIndex& j);
ExactInt multi_qbinom(const Params& params, const MultiIndex& i, const MultiIndex& j);

/// The structure constant of the differential formulas,
///   {A+B+C over A} {B+C over B} <A+B over A> <A+C over A>,
/// computed exactly, then reduced mod p.
Coeff gamma(const Params& params, const MultiIndex& a, const MultiIndex& b,
            const MultiIndex& c);

/// Scalar case with memoization (hot path of the differential machinery).
Coeff gamma_scalar(const Params& params, std::uint64_t a, std::uint64_t b,
                   std::uint64_t c);

/// Least multiple of p strictly greater than q; sigma(0) = p.
std::uint64_t sigma(const Params& params, std::uint64_t q);

/// p-adic valuation of a nonzero exact integer.
std::uint64_t valuation(std::uint32_t p, ExactInt v);

}  // namespace logjet
