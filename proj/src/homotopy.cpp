#include "logjet/homotopy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace logjet {

EtaPolynomial h1_eta(const Params& params, std::uint64_t i_n, const MultiIndex& j) {
  EtaPolynomial out;
  if (i_n % params.pm != 0) return out;
  std::uint64_t j_n = j.last();
  if (j_n == 0 || !j.zero_last().is_zero()) return out;
  std::uint64_t q = i_n / params.pm;
  if (j_n < params.pm) {
    out[i_n + j_n] = 1 % params.p;
  } else if (j_n == params.pm) {
    ExactInt falling = 1;  // u!/q!, built up term by term
    for (std::uint64_t u = q; u < sigma(params, q); ++u) {
      if (u > q) falling *= u;
      Coeff c = reduce_mod(falling, params.p);
      if ((u - q) % 2 == 1) c = neg_mod(c, params.p);
      if (c != 0) out[params.pm * (u + 1)] = c;
    }
  }
  return out;
}

Chain h1(const Params& params, const DeltaSymbol& s) {
  if (s.degree() != 1) throw std::invalid_argument("h1: degree-1 symbol required");
  if (s.eta.size() != params.n) throw std::invalid_argument("h1: eta length mismatch");
  if (!is_canonical(params, s)) throw std::invalid_argument("h1: non-canonical symbol");
  Chain out(0);
  MultiIndex ihat = s.eta.zero_last();
  for (auto [expnt, c] : h1_eta(params, s.eta.last(), s.slots[0])) {
    MultiIndex e = ihat;
    e[params.n - 1] = static_cast<std::uint32_t>(expnt);
    out.add_canonical(params, DeltaSymbol{e, {}}, c);
  }
  return out;
}

Chain h(QuotientContext& ctx, const Chain& v) {
  const Params& params = ctx.params();
  if (v.degree() == 0) throw std::invalid_argument("h: degree must be >= 1");
  Chain out(v.degree() - 1);
  for (const auto& [sym0, c0] : v.terms()) {
    const Chain expanded = ctx.basis_expand(sym0);
    for (const auto& [sym, cb] : expanded.terms()) {
      Coeff c = mul_mod(c0, cb, params.p);
      std::size_t s = s_index(sym.slots);
      EtaPolynomial poly = h1_eta(params, sym.eta.last(), sym.slots[s - 1]);
      if (poly.empty()) continue;
      Coeff sign = (s % 2 == 1) ? 1 % params.p : neg_mod(1 % params.p, params.p);
      std::vector<MultiIndex> prefix(sym.slots.begin(), sym.slots.begin() + (s - 1));
      MultiIndex ihat = sym.eta.zero_last();
      for (auto [expnt, ck] : poly) {
        MultiIndex k = MultiIndex::zeros(params.n);
        k[params.n - 1] = static_cast<std::uint32_t>(expnt);
        Chain pushed = push_coefficient(params, k, prefix, ihat);
        Coeff cc = mul_mod(c, mul_mod(sign, ck, params.p), params.p);
        for (const auto& [psym, pc] : pushed.terms()) {
          DeltaSymbol t = psym;
          t.slots.insert(t.slots.end(), sym.slots.begin() + s, sym.slots.end());
          out.add_canonical(params, t, mul_mod(cc, pc, params.p));
        }
      }
    }
  }
  return out;
}

Chain pi(const Params& params, std::size_t i, const Chain& v) {
  if (i < 1 || i > params.n) throw std::invalid_argument("pi: coordinate out of range");
  Chain out(v.degree());
  for (const auto& [s, c] : v.terms()) {
    bool kill = s.eta[i - 1] != 0;
    for (const auto& j : s.slots)
      if (j[i - 1] != 0) kill = true;
    if (!kill) out.add_canonical(params, s, c);
  }
  return out;
}

namespace {

void validate_perm(const Params& params, const std::vector<std::size_t>& perm) {
  if (perm.size() != params.n) throw std::invalid_argument("permute: wrong length");
  std::vector<bool> hit(params.n, false);
  for (std::size_t v : perm) {
    if (v < 1 || v > params.n || hit[v - 1])
      throw std::invalid_argument("permute: not a permutation of 1..n");
    hit[v - 1] = true;
  }
}

}  // namespace

Chain permute(const Params& params, const std::vector<std::size_t>& perm, const Chain& v) {
  validate_perm(params, perm);
  auto relabel = [&](const MultiIndex& x) {
    MultiIndex y = MultiIndex::zeros(params.n);
    for (std::size_t k = 0; k < params.n; ++k) y[perm[k] - 1] = x[k];
    return y;
  };
  Chain out(v.degree());
  for (const auto& [s, c] : v.terms()) {
    DeltaSymbol t{relabel(s.eta), {}};
    t.slots.reserve(s.slots.size());
    for (const auto& j : s.slots) t.slots.push_back(relabel(j));
    out.add_canonical(params, t, c);
  }
  return out;
}

CheckResult homotopy_check(QuotientContext& ctx, const DeltaSymbol& s) {
  const Params& params = ctx.params();
  if (!is_canonical(params, s)) throw std::invalid_argument("homotopy_check: non-canonical symbol");
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res;
  res.input = s;

  Chain x = Chain::single(params, s);
  Chain w = h(ctx, differential(params, x));
  if (s.degree() >= 1) w = add(params, w, differential(params, h(ctx, x)));

  bool no_last_content = s.eta.last() == 0 &&
                         std::all_of(s.slots.begin(), s.slots.end(),
                                     [](const MultiIndex& j) { return j.last() == 0; });
  res.computed = w;
  res.expected = no_last_content ? Chain(s.degree()) : x;
  res.residual = sub(params, w, res.expected);
  res.pass = ctx.quotient_zero(res.residual);
  res.closure_size = ctx.last_closure_size();
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

Chain poincare_contract(QuotientContext& ctx, const Chain& v) {
  if (v.degree() != 0) throw std::invalid_argument("poincare_contract: degree 0 required");
  const Params& params = ctx.params();
  Chain cur = v;
  for (std::size_t i = params.n; i >= 1; --i) {
    std::vector<std::size_t> perm(params.n);
    std::iota(perm.begin(), perm.end(), std::size_t(1));
    std::swap(perm[i - 1], perm[params.n - 1]);
    Chain w = permute(params, perm, cur);
    w = h(ctx, differential(params, w));
    w = permute(params, perm, w);  // a transposition is its own inverse
    cur = sub(params, cur, w);
  }
  return cur;
}

}  // namespace logjet
