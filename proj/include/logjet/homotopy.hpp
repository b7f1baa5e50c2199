#pragma once

#include "logjet/complex.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace logjet {

/// Finite map eta_n-exponent -> coefficient: the shape of the degree-1
/// contraction's output before the hatted part is merged back in.
using EtaPolynomial = std::map<std::uint64_t, Coeff>;

/// The eta_n-part of the degree-1 contraction on delta(i_n 1_n; J):
///   empty                      unless p^m | i_n, hat(J) = 0 and j_n > 0;
///   { i_n + j_n -> 1 }         when 0 < j_n < p^m;
///   alternating factorial sum  when j_n = p^m, with exponents p^m(u+1) and
///                              coefficients (-1)^{u-q} u!/q! for q <= u < sigma(q),
///                              computed exactly, then reduced.
EtaPolynomial h1_eta(const Params& params, std::uint64_t i_n, const MultiIndex& j);

/// Degree-1 contraction, hatted part merged in.  Requires a canonical
/// degree-1 symbol.
Chain h1(const Params& params, const DeltaSymbol& s);

/// Contraction in degree r >= 1: rewrites each symbol into the distinguished
/// basis, then applies (-1)^{s-1} delta(I-hat; J_1..J_{s-1}) (x) h1(...) with
/// the scalar part transported to position 0 via push_coefficient.
Chain h(QuotientContext& ctx, const Chain& v);

/// Projector killing every symbol with i-th coordinate content (1-based i).
Chain pi(const Params& params, std::size_t i, const Chain& v);

/// Relabels every component of every index; perm[k] is the 1-based image of
/// coordinate k+1.  Must be a permutation of {1..n}.
Chain permute(const Params& params, const std::vector<std::size_t>& perm, const Chain& v);

struct CheckResult {
  DeltaSymbol input;
  Chain computed;   // h(d x) + d(h x)
  Chain expected;   // 0 or x, by the last-coordinate content of x
  Chain residual;   // computed - expected
  bool pass = false;
  std::size_t closure_size = 0;
  double seconds = 0.0;

  CheckResult() : computed(0), expected(0), residual(0) {}
};

/// Runs the homotopy identity on one canonical symbol.  Degree 0 checks
/// h(d x) alone; degree r >= 1 checks h(d x) + d(h x).  Passes iff the
/// residual against the expected value is zero in the quotient.
CheckResult homotopy_check(QuotientContext& ctx, const DeltaSymbol& s);

/// Applies, for i = n down to 1, the i-conjugated degree-0 contraction
/// v -> v - h_i(d v); returns the terminal value (the constant part of v).
Chain poincare_contract(QuotientContext& ctx, const Chain& v);

}  // namespace logjet
