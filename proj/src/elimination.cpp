#include "logjet/elimination.hpp"

#include <algorithm>
#include <set>

namespace logjet {

FpSpan::FpSpan(std::uint32_t p, std::vector<DeltaSymbol> columns)
    : p_(p), cols_(std::move(columns)) {
  std::sort(cols_.begin(), cols_.end());
  cols_.erase(std::unique(cols_.begin(), cols_.end()), cols_.end());
  for (std::size_t k = 0; k < cols_.size(); ++k) index_.emplace(cols_[k], k);
}

std::optional<std::vector<Coeff>> FpSpan::to_dense(const Chain& v) const {
  std::vector<Coeff> d(cols_.size(), 0);
  for (const auto& [s, c] : v.terms()) {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    d[it->second] = c % p_;
  }
  return d;
}

void FpSpan::reduce_in_place(std::vector<Coeff>& v) const {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    auto it = rows_.find(k);
    if (it == rows_.end()) continue;
    Coeff f = v[k];
    const std::vector<Coeff>& row = it->second;
    for (std::size_t j = k; j < v.size(); ++j)
      if (row[j] != 0) v[j] = sub_mod(v[j], mul_mod(f, row[j], p_), p_);
  }
}

bool FpSpan::insert(const Chain& v) {
  auto d = to_dense(v);
  if (!d) throw std::logic_error("FpSpan::insert: symbol outside column universe");
  reduce_in_place(*d);
  auto lead = std::find_if(d->begin(), d->end(), [](Coeff c) { return c != 0; });
  if (lead == d->end()) return false;
  std::size_t pivot = static_cast<std::size_t>(lead - d->begin());
  Coeff inv = inv_mod((*d)[pivot], p_);
  for (auto& c : *d) c = mul_mod(c, inv, p_);
  rows_.emplace(pivot, std::move(*d));
  return true;
}

std::optional<std::vector<Coeff>> FpSpan::residual(const Chain& v) const {
  auto d = to_dense(v);
  if (!d) return std::nullopt;
  reduce_in_place(*d);
  return d;
}

bool FpSpan::contains(const Chain& v) const {
  auto d = residual(v);
  if (!d) return false;
  return std::all_of(d->begin(), d->end(), [](Coeff c) { return c == 0; });
}

namespace {

std::vector<DeltaSymbol> support_union(const std::vector<const Chain*>& chains,
                                       const std::vector<DeltaSymbol>& extra) {
  std::set<DeltaSymbol> s(extra.begin(), extra.end());
  for (const Chain* v : chains)
    for (const auto& [sym, c] : v->terms()) s.insert(sym);
  return {s.begin(), s.end()};
}

void check_degrees(std::size_t degree, const std::vector<Chain>& gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("elimination: degree mismatch");
}

}  // namespace

bool span_contains(const Params& params, const Chain& v,
                   const std::vector<Chain>& generators) {
  check_degrees(v.degree(), generators);
  std::vector<const Chain*> all{&v};
  for (const auto& g : generators) all.push_back(&g);
  FpSpan span(params.p, support_union(all, {}));
  for (const auto& g : generators) span.insert(g);
  return span.contains(v);
}

CoordinateSolver::CoordinateSolver(std::uint32_t p, std::vector<DeltaSymbol> columns,
                                   const std::vector<Chain>& generators,
                                   std::vector<DeltaSymbol> basis)
    : p_(p), genspan_(p, std::move(columns)), basis_(std::move(basis)) {
  for (const auto& g : generators)
    if (genspan_.insert(g)) ++generator_count_;
  const std::size_t ncols = genspan_.columns().size();
  const auto& index = genspan_.columns();
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    std::vector<Coeff> vec(ncols, 0);
    auto pos = std::lower_bound(index.begin(), index.end(), basis_[b]);
    if (pos == index.end() || *pos != basis_[b])
      throw std::logic_error("CoordinateSolver: basis symbol outside columns");
    vec[static_cast<std::size_t>(pos - index.begin())] = 1 % p_;
    genspan_.reduce_in_place(vec);
    std::vector<Coeff> coords(basis_.size(), 0);
    coords[b] = 1 % p_;
    // reduce against the basis echelon, tracking the combination
    for (std::size_t k = 0; k < ncols; ++k) {
      if (vec[k] == 0) continue;
      auto it = bpivot_.find(k);
      if (it == bpivot_.end()) continue;
      const BasisRow& row = brows_[it->second];
      Coeff f = vec[k];
      for (std::size_t j = k; j < ncols; ++j)
        if (row.vec[j] != 0) vec[j] = sub_mod(vec[j], mul_mod(f, row.vec[j], p_), p_);
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (row.coords[j] != 0)
          coords[j] = sub_mod(coords[j], mul_mod(f, row.coords[j], p_), p_);
    }
    auto lead = std::find_if(vec.begin(), vec.end(), [](Coeff c) { return c != 0; });
    if (lead == vec.end()) {
      dependent_ = true;
      continue;
    }
    std::size_t pivot = static_cast<std::size_t>(lead - vec.begin());
    Coeff inv = inv_mod(vec[pivot], p_);
    for (auto& c : vec) c = mul_mod(c, inv, p_);
    for (auto& c : coords) c = mul_mod(c, inv, p_);
    bpivot_.emplace(pivot, brows_.size());
    brows_.push_back(BasisRow{std::move(vec), std::move(coords), pivot});
  }
}

std::optional<std::map<DeltaSymbol, Coeff>> CoordinateSolver::solve(const Chain& v) const {
  auto rv = genspan_.residual(v);
  if (!rv) return std::nullopt;  // touches symbols outside the universe
  const std::size_t ncols = rv->size();
  std::vector<Coeff> acc(basis_.size(), 0);
  for (std::size_t k = 0; k < ncols; ++k) {
    if ((*rv)[k] == 0) continue;
    auto it = bpivot_.find(k);
    if (it == bpivot_.end()) return std::nullopt;
    const BasisRow& row = brows_[it->second];
    Coeff f = (*rv)[k];
    for (std::size_t j = k; j < ncols; ++j)
      if (row.vec[j] != 0) (*rv)[j] = sub_mod((*rv)[j], mul_mod(f, row.vec[j], p_), p_);
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (row.coords[j] != 0) acc[j] = add_mod(acc[j], mul_mod(f, row.coords[j], p_), p_);
  }
  if (dependent_)
    throw ConsistencyError("solve_coordinates: coordinates are not unique");
  std::map<DeltaSymbol, Coeff> out;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (acc[b] != 0) out.emplace(basis_[b], acc[b]);
  return out;
}

std::optional<std::map<DeltaSymbol, Coeff>> solve_coordinates(
    const Params& params, const Chain& v, const std::vector<DeltaSymbol>& basis,
    const std::vector<Chain>& generators) {
  check_degrees(v.degree(), generators);
  for (const auto& b : basis)
    if (b.degree() != v.degree())
      throw std::invalid_argument("solve_coordinates: basis degree mismatch");
  std::vector<const Chain*> all{&v};
  for (const auto& g : generators) all.push_back(&g);
  CoordinateSolver solver(params.p, support_union(all, basis), generators, basis);
  return solver.solve(v);
}

}  // namespace logjet
