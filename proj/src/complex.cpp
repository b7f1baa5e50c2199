#include "logjet/complex.hpp"

#include <algorithm>

namespace logjet {

std::size_t RelationSpec::type_s() const {
  std::vector<MultiIndex> surrounding = before;
  surrounding.insert(surrounding.end(), after.begin(), after.end());
  if (surrounding.empty()) return 0;
  return s_index(surrounding);
}

void validate(const Params& params, const RelationSpec& spec) {
  if (spec.position < 1) throw std::invalid_argument("RelationSpec: position must be >= 1");
  if (spec.before.size() != spec.position - 1)
    throw std::invalid_argument("RelationSpec: before slot count must be position-1");
  if (spec.eta.size() != params.n || spec.inner.size() != params.n)
    throw std::invalid_argument("RelationSpec: index length mismatch");
  std::uint64_t w = spec.inner.norm();
  if (w <= params.pm || w > 2 * params.pm)
    throw std::invalid_argument("RelationSpec: inner norm must lie in (p^m, 2p^m]");
  for (const auto& j : spec.before)
    if (!in_slot_set(params, j)) throw std::invalid_argument("RelationSpec: bad before slot");
  for (const auto& j : spec.after)
    if (!in_slot_set(params, j)) throw std::invalid_argument("RelationSpec: bad after slot");
}

Chain diff0(const Params& params, const MultiIndex& i) {
  Chain out(1);
  for (const auto& [a, b, c] : decompositions(i, /*forbid_b_eq_i=*/true, false)) {
    Coeff g = gamma(params, a, b, c);
    if (g == 0) continue;
    out.add_term(params, DeltaSymbol{a + b, {a + c}}, g);
  }
  return out;
}

Chain diff1_slot(const Params& params, const MultiIndex& j) {
  if (!in_slot_set(params, j)) throw std::invalid_argument("diff1_slot: J not in the slot set");
  Chain out(2);
  for (const auto& [a, b, c] : decompositions(j, true, true)) {
    Coeff g = gamma(params, a, b, c);
    if (g == 0) continue;
    out.add_term(params, DeltaSymbol{MultiIndex::zeros(j.size()), {a + b, a + c}},
                 neg_mod(g, params.p));
  }
  return out;
}

std::pair<Coeff, MultiIndex> eta_product(const Params& params, const MultiIndex& i,
                                         const MultiIndex& k) {
  MultiIndex sum = i + k;
  return {reduce_mod(multi_mbinom(params, sum, i), params.p), sum};
}

Chain push_coefficient(const Params& params, const MultiIndex& k,
                       const std::vector<MultiIndex>& slots,
                       const MultiIndex& eta_target) {
  if (slots.empty()) {
    auto [c, e] = eta_product(params, eta_target, k);
    Chain out(0);
    out.add_term(params, DeltaSymbol{e, {}}, c);
    return out;
  }
  const MultiIndex& last = slots.back();
  std::vector<MultiIndex> rest(slots.begin(), slots.end() - 1);
  Chain out(slots.size());
  for (const auto& [a, b, c] : decompositions(k, false, false)) {
    Coeff g = gamma(params, a, b, c);
    if (g == 0) continue;
    MultiIndex slot = last + (a + c);
    if (!in_slot_set(params, slot)) continue;
    Chain inner = push_coefficient(params, a + b, rest, eta_target);
    for (const auto& [sym, cf] : inner.terms()) {
      DeltaSymbol t = sym;
      t.slots.push_back(slot);
      out.add_canonical(params, t, mul_mod(g, cf, params.p));
    }
  }
  return out;
}

Chain differential(const Params& params, const Chain& v) {
  const std::size_t r = v.degree();
  Chain out(r + 1);
  for (const auto& [sym, coeff] : v.terms()) {
    for (const auto& [a, b, c] : decompositions(sym.eta, true, false)) {
      Coeff g = gamma(params, a, b, c);
      if (g == 0) continue;
      DeltaSymbol t{a + b, {}};
      t.slots.reserve(r + 1);
      t.slots.push_back(a + c);
      t.slots.insert(t.slots.end(), sym.slots.begin(), sym.slots.end());
      out.add_term(params, std::move(t), mul_mod(coeff, g, params.p));
    }
    for (std::size_t k = 1; k <= r; ++k) {
      Coeff sign = (k % 2 == 1) ? neg_mod(1 % params.p, params.p) : 1 % params.p;
      for (const auto& [a, b, c] : decompositions(sym.slots[k - 1], true, true)) {
        Coeff g = gamma(params, a, b, c);
        if (g == 0) continue;
        DeltaSymbol t{sym.eta, {}};
        t.slots.reserve(r + 1);
        t.slots.insert(t.slots.end(), sym.slots.begin(), sym.slots.begin() + (k - 1));
        t.slots.push_back(a + b);
        t.slots.push_back(a + c);
        t.slots.insert(t.slots.end(), sym.slots.begin() + k, sym.slots.end());
        out.add_term(params, std::move(t),
                     mul_mod(coeff, mul_mod(sign, g, params.p), params.p));
      }
    }
  }
  return out;
}

Chain relation_chain(const Params& params, const RelationSpec& spec) {
  validate(params, spec);
  Chain out(spec.degree());
  for (const auto& [a, b, c] : decompositions(spec.inner, true, true)) {
    Coeff g = gamma(params, a, b, c);
    if (g == 0) continue;
    DeltaSymbol t{spec.eta, {}};
    t.slots.reserve(spec.degree());
    t.slots.insert(t.slots.end(), spec.before.begin(), spec.before.end());
    t.slots.push_back(a + b);
    t.slots.push_back(a + c);
    t.slots.insert(t.slots.end(), spec.after.begin(), spec.after.end());
    out.add_term(params, std::move(t), g);
  }
  return out;
}

std::vector<Chain> relations_touching(const Params& params,
                                      const std::set<DeltaSymbol>& support) {
  std::vector<Chain> out;
  std::set<RelationSpec> seen;
  std::set<DeltaSymbol> processed;
  std::vector<DeltaSymbol> frontier(support.begin(), support.end());
  while (!frontier.empty()) {
    std::vector<DeltaSymbol> next;
    for (const auto& sym : frontier) {
      if (!processed.insert(sym).second) continue;
      const std::size_t r = sym.degree();
      for (std::size_t k = 1; k + 1 <= r; ++k) {
        const MultiIndex& p1 = sym.slots[k - 1];
        const MultiIndex& p2 = sym.slots[k];
        // A term delta(...; A+B, A+C, ...) of an inner J comes from any
        // A <= min(P,Q) with J = P + Q - A in the legal inner range.
        MultiIndex bound = p1.min(p2);
        std::vector<std::uint32_t> av(bound.size(), 0);
        bool more = true;
        while (more) {
          MultiIndex a(av);
          MultiIndex inner = (p1 + p2) - a;
          std::uint64_t w = inner.norm();
          if (w > params.pm && w <= 2 * params.pm) {
            RelationSpec spec;
            spec.eta = sym.eta;
            spec.position = k;
            spec.inner = inner;
            spec.before.assign(sym.slots.begin(), sym.slots.begin() + (k - 1));
            spec.after.assign(sym.slots.begin() + (k + 1), sym.slots.end());
            if (seen.insert(spec).second) {
              Chain rel = relation_chain(params, spec);
              if (!rel.is_zero()) {
                for (const auto& [t, c] : rel.terms())
                  if (!processed.count(t)) next.push_back(t);
                out.push_back(std::move(rel));
              }
            }
          }
          // lexicographic successor of av below bound
          more = false;
          for (std::size_t pos = av.size(); pos-- > 0;) {
            if (av[pos] < bound[pos]) {
              ++av[pos];
              std::fill(av.begin() + pos + 1, av.end(), 0);
              more = true;
              break;
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

std::vector<std::vector<MultiIndex>> tuples(const std::vector<MultiIndex>& items,
                                            std::size_t len) {
  std::vector<std::vector<MultiIndex>> out{{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::vector<MultiIndex>> next;
    next.reserve(out.size() * items.size());
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

}  // namespace

struct QuotientContext::Grade {
  FpSpan span;
  std::size_t relation_count = 0;
  Grade(std::uint32_t p, std::vector<DeltaSymbol> cols) : span(p, std::move(cols)) {}
};

struct QuotientContext::BasisGrade {
  CoordinateSolver solver;
  std::vector<DeltaSymbol> basis;
  BasisGrade(std::uint32_t p, std::vector<DeltaSymbol> cols,
             const std::vector<Chain>& gens, std::vector<DeltaSymbol> b)
      : solver(p, std::move(cols), gens, b), basis(std::move(b)) {}
};

QuotientContext::QuotientContext(const Params& params) : params_(params) {}
QuotientContext::~QuotientContext() = default;

namespace {

std::vector<DeltaSymbol> grade_universe(const Params& params, const MultiIndex& eta,
                                        std::size_t r) {
  std::vector<DeltaSymbol> cols;
  for (auto& slots : tuples(slot_set(params), r)) cols.push_back(DeltaSymbol{eta, slots});
  return cols;
}

}  // namespace

QuotientContext::Grade& QuotientContext::grade(const MultiIndex& eta, std::size_t r) {
  auto key = std::make_pair(eta, r);
  auto it = grades_.find(key);
  if (it != grades_.end()) return *it->second;

  auto g = std::make_unique<Grade>(params_.p, grade_universe(params_, eta, r));
  if (r >= 2) {
    const auto slots = slot_set(params_);
    const auto inners = relation_inner_set(params_);
    for (std::size_t k = 1; k + 1 <= r; ++k) {
      for (auto& before : tuples(slots, k - 1)) {
        for (auto& after : tuples(slots, r - k - 1)) {
          for (const auto& inner : inners) {
            RelationSpec spec{eta, k, inner, before, after};
            Chain rel = relation_chain(params_, spec);
            if (rel.is_zero()) continue;
            ++g->relation_count;
            g->span.insert(rel);
          }
        }
      }
    }
  }
  return *grades_.emplace(key, std::move(g)).first->second;
}

bool QuotientContext::quotient_zero(const Chain& v) {
  last_closure_ = 0;
  if (v.is_zero()) return true;
  // Split by eta exponent; relations are eta-homogeneous.
  std::map<MultiIndex, Chain> parts;
  for (const auto& [s, c] : v.terms()) {
    auto [it, inserted] = parts.try_emplace(s.eta, Chain(v.degree()));
    it->second.add_canonical(params_, s, c);
  }
  for (const auto& [eta, part] : parts) {
    Grade& g = grade(eta, v.degree());
    last_closure_ += g.relation_count;
    if (!g.span.contains(part)) return false;
  }
  return true;
}

bool QuotientContext::is_basis_symbol(const DeltaSymbol& s) const {
  if (s.degree() == 0) return true;
  std::size_t si = s_index(s.slots);
  return s.slots[si - 1].last() < params_.pm || si == s.degree();
}

QuotientContext::BasisGrade& QuotientContext::basis_grade(const MultiIndex& eta,
                                                          std::size_t r) {
  auto key = std::make_pair(eta, r);
  auto it = basis_grades_.find(key);
  if (it != basis_grades_.end()) return *it->second;

  auto cols = grade_universe(params_, eta, r);
  std::vector<DeltaSymbol> basis;
  for (const auto& s : cols)
    if (is_basis_symbol(s)) basis.push_back(s);

  // Leading-slot relation subfamily: type (k,k) with inner last component
  // >= p^m; the slots in front must carry no last-coordinate content.
  std::vector<Chain> gens;
  const auto slots = slot_set(params_);
  std::vector<MultiIndex> hatted;
  for (const auto& j : slots)
    if (j.last() == 0) hatted.push_back(j);
  std::vector<MultiIndex> inners;
  for (const auto& j : relation_inner_set(params_))
    if (j.last() >= params_.pm) inners.push_back(j);
  for (std::size_t k = 1; k + 1 <= r; ++k) {
    for (auto& before : tuples(hatted, k - 1)) {
      for (auto& after : tuples(slots, r - k - 1)) {
        for (const auto& inner : inners) {
          Chain rel = relation_chain(params_, RelationSpec{eta, k, inner, before, after});
          if (!rel.is_zero()) gens.push_back(std::move(rel));
        }
      }
    }
  }
  auto bg = std::make_unique<BasisGrade>(params_.p, std::move(cols), gens, std::move(basis));
  return *basis_grades_.emplace(key, std::move(bg)).first->second;
}

Chain QuotientContext::basis_expand(const DeltaSymbol& s) {
  if (!is_canonical(params_, s))
    throw std::invalid_argument("basis_expand: non-canonical symbol");
  if (s.degree() < 2 || is_basis_symbol(s)) return Chain::single(params_, s);
  auto memo = expand_memo_.find(s);
  if (memo != expand_memo_.end()) return memo->second;

  BasisGrade& bg = basis_grade(s.eta, s.degree());
  auto coords = bg.solver.solve(Chain::single(params_, s));
  if (!coords)
    throw ConsistencyError("basis_expand: " + render(s) +
                           " is not expressible in the distinguished basis");
  Chain out(s.degree());
  for (const auto& [b, c] : *coords) out.add_canonical(params_, b, c);
  expand_memo_.emplace(s, out);
  return out;
}

Chain QuotientContext::basis_expand(const Chain& v) {
  Chain out(v.degree());
  for (const auto& [s, c] : v.terms())
    out = add(params_, out, scale(params_, c, basis_expand(s)));
  return out;
}

bool quotient_zero(const Params& params, const Chain& v) {
  if (v.is_zero()) return true;
  std::set<DeltaSymbol> support;
  for (const auto& [s, c] : v.terms()) support.insert(s);
  return span_contains(params, v, relations_touching(params, support));
}

Chain basis_expand(const Params& params, const DeltaSymbol& s) {
  QuotientContext ctx(params);
  return ctx.basis_expand(s);
}

}  // namespace logjet
